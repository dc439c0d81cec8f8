#include "terw/scheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace terw {

FactorialScheme::FactorialScheme(SchemeParams params, long long maxPoints)
    : params_(std::move(params)), maxPoints_(maxPoints) {}

void FactorialScheme::requireDeskScale(const char* what) const {
    if (params_.pointCount > maxPoints_) {
        std::ostringstream os;
        os << what << " is a brute-force operation and refuses to run on "
           << params_.pointCount << " points (cap " << maxPoints_ << ")";
        throw ResourceCapError(os.str());
    }
}

std::vector<int> FactorialScheme::coords(long long point) const {
    if (point < 0 || point >= params_.pointCount)
        throw std::invalid_argument("point index out of range");
    std::vector<int> c(static_cast<std::size_t>(params_.n));
    for (int a = 0; a < params_.n; ++a) {
        const int ua = params_.u[static_cast<std::size_t>(a)];
        c[static_cast<std::size_t>(a)] = static_cast<int>(point % ua);
        point /= ua;
    }
    return c;
}

long long FactorialScheme::index(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != params_.n)
        throw std::invalid_argument("coordinate count mismatch");
    long long idx = 0, radix = 1;
    for (int a = 0; a < params_.n; ++a) {
        const int ua = params_.u[static_cast<std::size_t>(a)];
        const int c = coords[static_cast<std::size_t>(a)];
        if (c < 0 || c >= ua) throw std::invalid_argument("coordinate out of range");
        idx += c * radix;
        radix *= ua;
    }
    return idx;
}

std::string FactorialScheme::renderPoint(long long point) const {
    const auto c = coords(point);
    std::string out;
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (a) out += ',';
        out += std::to_string(c[a]);
    }
    return out;
}

long long FactorialScheme::parsePoint(const std::string& text) const {
    std::vector<int> c;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        c.push_back(std::stoi(tok));
    return index(c);
}

RelIndex FactorialScheme::rel(long long x, long long y) const {
    if (x < 0 || x >= params_.pointCount || y < 0 || y >= params_.pointCount)
        throw std::invalid_argument("point index out of range");
    RelIndex g = 0;
    for (int a = 0; a < params_.n; ++a) {
        const int ua = params_.u[static_cast<std::size_t>(a)];
        if (x % ua != y % ua) g |= RelIndex{1} << a;
        x /= ua;
        y /= ua;
    }
    return g;
}

long long FactorialScheme::valency(RelIndex g) const {
    requireIndex(g, params_.d);
    long long k = 1;
    for (int a = 0; a < params_.n; ++a)
        if (g & (RelIndex{1} << a)) k *= params_.u[static_cast<std::size_t>(a)] - 1;
    return k;
}

long long FactorialScheme::intersectionNumber(RelIndex g, RelIndex h, RelIndex i) const {
    requireIndex(g, params_.d);
    requireIndex(h, params_.d);
    requireIndex(i, params_.d);
    const RelIndex lo = g ^ h;
    if (!le2(lo, i) || !le2(i, odot(g, h, params_))) return 0;
    const RelIndex extra = i & ~lo;                       // inside tilde(g & h)
    const RelIndex rest = tilde(g & h, params_) & ~extra;
    long long v = 1;
    for (int a = 0; a < params_.n; ++a) {
        const RelIndex bit = RelIndex{1} << a;
        if (extra & bit) v *= params_.u[static_cast<std::size_t>(a)] - 2;
        else if (rest & bit) v *= params_.u[static_cast<std::size_t>(a)] - 1;
    }
    return v;
}

long long FactorialScheme::intersectionNumberOracle(RelIndex g, RelIndex h, RelIndex i) const {
    requireIndex(g, params_.d);
    requireIndex(h, params_.d);
    requireIndex(i, params_.d);
    requireDeskScale("intersection_number_oracle");
    // representative pair (x, y) in R_i: x = origin, y takes coordinate 1
    // on the support of i
    const long long x = 0;
    std::vector<int> yc(static_cast<std::size_t>(params_.n), 0);
    for (int a = 0; a < params_.n; ++a)
        if (i & (RelIndex{1} << a)) yc[static_cast<std::size_t>(a)] = 1;
    const long long y = index(yc);
    long long count = 0;
    for (long long a = 0; a < params_.pointCount; ++a)
        if (rel(x, a) == g && rel(a, y) == h) ++count;
    return count;
}

long long FactorialScheme::tripleIntersection(long long x, long long y, long long z,
                                              RelIndex g, RelIndex h, RelIndex i) const {
    requireIndex(g, params_.d);
    requireIndex(h, params_.d);
    requireIndex(i, params_.d);
    requireDeskScale("triple_intersection");
    long long count = 0;
    for (long long a = 0; a < params_.pointCount; ++a)
        if (rel(x, a) == g && rel(y, a) == h && rel(z, a) == i) ++count;
    return count;
}

std::vector<RelIndex> FactorialScheme::complexProduct(const std::vector<RelIndex>& U,
                                                      const std::vector<RelIndex>& V) const {
    if (U.empty() || V.empty())
        throw std::invalid_argument("complex product of an empty relation set");
    std::set<RelIndex> out;
    for (const RelIndex b : U)
        for (const RelIndex c : V) {
            // nonzero exactly on the window between b (+) c and b (.) c
            forEachInInterval(b ^ c, odot(b, c, params_), [&](RelIndex a) {
                if (intersectionNumber(b, c, a) > 0) out.insert(a);
            });
        }
    return {out.begin(), out.end()};
}

std::vector<RelIndex> FactorialScheme::closureMembers(const std::vector<RelIndex>& U) const {
    if (U.empty()) throw std::invalid_argument("cannot close an empty relation set");
    std::set<RelIndex> cur(U.begin(), U.end());
    cur.insert(0);
    while (true) {
        const std::vector<RelIndex> v(cur.begin(), cur.end());
        const auto prod = complexProduct(v, v);
        std::set<RelIndex> next(cur);
        next.insert(prod.begin(), prod.end());
        if (next == cur) break;
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

ClosedSubset FactorialScheme::generatedClosedSubset(const std::vector<RelIndex>& U) const {
    return describe(closureMembers(U));
}

bool FactorialScheme::isClosed(const std::vector<RelIndex>& members) const {
    if (members.empty()) return false;
    if (!std::binary_search(members.begin(), members.end(), RelIndex{0})) return false;
    const auto prod = complexProduct(members, members);
    return std::includes(members.begin(), members.end(), prod.begin(), prod.end());
}

std::vector<RelIndex> FactorialScheme::thinRadical(const std::vector<RelIndex>& members) const {
    if (!isClosed(members)) throw std::invalid_argument("thin radical needs a closed subset");
    std::vector<RelIndex> out;
    for (const RelIndex g : members)
        if (valency(g) == 1) out.push_back(g);
    return out;
}

std::vector<RelIndex> FactorialScheme::thinResidue(const std::vector<RelIndex>& members) const {
    if (!isClosed(members)) throw std::invalid_argument("thin residue needs a closed subset");
    std::set<RelIndex> squares;
    for (const RelIndex g : members) {
        const auto sq = complexProduct({g}, {g});
        squares.insert(sq.begin(), sq.end());
    }
    return closureMembers({squares.begin(), squares.end()});
}

std::vector<RelIndex> FactorialScheme::allRelations() const {
    std::vector<RelIndex> v(params_.d + 1);
    for (RelIndex a = 0; a <= params_.d; ++a) v[a] = a;
    return v;
}

std::vector<std::vector<RelIndex>> FactorialScheme::thinRadicalSubgroups() const {
    std::vector<int> twoPos;
    for (int a = 0; a < params_.n; ++a)
        if (!(params_.tildeMask & (RelIndex{1} << a))) twoPos.push_back(a);
    auto subs = enumerateSubspacesGF2(static_cast<int>(twoPos.size()));
    for (auto& sub : subs) {
        for (auto& v : sub) {
            RelIndex w = 0;
            for (std::size_t t = 0; t < twoPos.size(); ++t)
                if (v & (RelIndex{1} << t)) w |= RelIndex{1} << twoPos[t];
            v = w;
        }
        std::sort(sub.begin(), sub.end());
    }
    return subs;
}

ClosedSubset FactorialScheme::describe(std::vector<RelIndex> members) const {
    std::sort(members.begin(), members.end());
    ClosedSubset cs;
    cs.members = std::move(members);
    cs.isClosed = isClosed(cs.members);
    if (cs.isClosed) {
        cs.thinRadical = thinRadical(cs.members);
        cs.thinResidue = thinResidue(cs.members);
    }
    for (const RelIndex g : cs.members) cs.pMax |= tilde(g, params_);
    const auto residueOfScheme = thinResidue(allRelations());
    cs.isStronglyNormal =
        cs.isClosed && std::includes(cs.members.begin(), cs.members.end(),
                                     residueOfScheme.begin(), residueOfScheme.end());
    return cs;
}

std::vector<ClosedSubset> FactorialScheme::enumerateClosedSubsets() const {
    std::vector<ClosedSubset> out;
    const auto subspaces = thinRadicalSubgroups();
    // every subset of the positions with u_a > 2, paired with every
    // subgroup of the thin radical
    forEachSubmask(params_.tildeMask, [&](RelIndex head) {
        for (const auto& sub : subspaces) {
            std::vector<RelIndex> members;
            forEachSubmask(head, [&](RelIndex b) {
                for (const RelIndex v : sub) members.push_back(b | v);
            });
            out.push_back(describe(std::move(members)));
        }
    });
    std::sort(out.begin(), out.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
        return a.members < b.members;
    });
    return out;
}

std::vector<ClosedSubset> FactorialScheme::enumerateStronglyNormal() const {
    std::vector<ClosedSubset> out;
    const RelIndex head = params_.tildeMask;  // support of the thin residue
    for (const auto& sub : thinRadicalSubgroups()) {
        std::vector<RelIndex> members;
        forEachSubmask(head, [&](RelIndex b) {
            for (const RelIndex v : sub) members.push_back(b | v);
        });
        out.push_back(describe(std::move(members)));
    }
    std::sort(out.begin(), out.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
        return a.members < b.members;
    });
    return out;
}

std::vector<std::vector<RelIndex>> FactorialScheme::enumerateClosedSubsetsNaive() const {
    if (params_.d > 15)
        throw std::invalid_argument("naive closed-subset scan only runs for d <= 15");
    std::vector<std::vector<RelIndex>> out;
    const std::uint32_t all = (std::uint32_t{1} << (params_.d + 1)) - 1;
    for (std::uint32_t s = 1; s <= all; s += 2) {  // must contain relation 0
        std::vector<RelIndex> members;
        for (RelIndex a = 0; a <= params_.d; ++a)
            if (s & (std::uint32_t{1} << a)) members.push_back(a);
        if (isClosed(members)) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long gaussianBinomial2(int m, int k) {
    if (k < 0 || k > m) return 0;
    // [m, k]_2 = prod_{j=0}^{k-1} (2^{m-j} - 1) / (2^{k-j} - 1)
    long long num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
        num *= (1LL << (m - j)) - 1;
        den *= (1LL << (k - j)) - 1;
    }
    return num / den;
}

long long galoisNumberG2(int m) {
    if (m < 0) throw std::invalid_argument("negative dimension");
    long long total = 0;
    for (int k = 0; k <= m; ++k) total += gaussianBinomial2(m, k);
    return total;
}

std::vector<std::vector<RelIndex>> enumerateSubspacesGF2(int m) {
    if (m < 0 || m > 20) throw std::invalid_argument("bad dimension");
    std::vector<std::vector<RelIndex>> out;
    std::vector<int> pivots;
    std::vector<RelIndex> rows;

    // expand a generator matrix (rows in RREF) into the full span
    const auto emit = [&]() {
        std::vector<RelIndex> span{0};
        for (const RelIndex r : rows) {
            const std::size_t sz = span.size();
            for (std::size_t t = 0; t < sz; ++t) span.push_back(span[t] ^ r);
        }
        std::sort(span.begin(), span.end());
        out.push_back(std::move(span));
    };

    // fill free entries of row `idx` (columns right of its pivot that are
    // not pivot columns), then recurse to the next pivot choice
    const auto fillRows = [&](auto&& self, std::size_t idx) -> void {
        if (idx == pivots.size()) {
            emit();
            return;
        }
        std::vector<int> freeCols;
        for (int c = pivots[idx] + 1; c < m; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                freeCols.push_back(c);
        const std::uint32_t combos = std::uint32_t{1} << freeCols.size();
        for (std::uint32_t bits = 0; bits < combos; ++bits) {
            RelIndex row = RelIndex{1} << pivots[idx];
            for (std::size_t t = 0; t < freeCols.size(); ++t)
                if (bits & (std::uint32_t{1} << t)) row |= RelIndex{1} << freeCols[t];
            rows.push_back(row);
            self(self, idx + 1);
            rows.pop_back();
        }
    };

    const auto choosePivots = [&](auto&& self, int from, int want) -> void {
        if (want == 0) {
            fillRows(fillRows, 0);
            return;
        }
        for (int c = from; c <= m - want; ++c) {
            pivots.push_back(c);
            self(self, c + 1, want - 1);
            pivots.pop_back();
        }
    };

    for (int r = 0; r <= m; ++r) choosePivots(choosePivots, 0, r);
    return out;
}

}  // namespace terw
