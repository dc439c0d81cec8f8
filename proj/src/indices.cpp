#include "terw/indices.hpp"

#include <limits>

namespace terw {

SchemeParams SchemeParams::make(const std::vector<int>& factorSizes) {
    SchemeParams p;
    p.n = static_cast<int>(factorSizes.size());
    if (p.n < 1) throw std::invalid_argument("need at least one factor");
    if (p.n > 24) throw std::invalid_argument("too many factors for the index type");
    p.u = factorSizes;
    p.d = (RelIndex{1} << p.n) - 1;
    int twos = 0;
    for (int a = 1; a <= p.n; ++a) {
        const int ua = p.u[static_cast<std::size_t>(a) - 1];
        if (ua < 2) throw std::invalid_argument("every factor size must be at least 2");
        if (ua == 2) {
            ++twos;
        } else {
            ++p.n2;
            p.tildeMask |= RelIndex{1} << (a - 1);
        }
        if (p.pointCount > std::numeric_limits<long long>::max() / ua)
            throw std::invalid_argument("point count overflows");
        p.pointCount *= ua;
    }
    p.d1 = 1LL << twos;
    return p;
}

std::vector<int> support(RelIndex g, int n) {
    if (n < 1 || n > 24) throw std::invalid_argument("bad factor count");
    requireIndex(g, (RelIndex{1} << n) - 1);
    std::vector<int> out;
    for (int a = 1; a <= n; ++a)
        if (g & (RelIndex{1} << (a - 1))) out.push_back(a);
    return out;
}

}  // namespace terw
