#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace terw {

/// A relation index of a factorial scheme: a bitmask over the factor
/// positions, with values in [0, 2^n - 1].  Bit a-1 (0-based) stands for
/// the 1-based factor position a.
using RelIndex = std::uint32_t;

/// Defining data of a factorial scheme on a product of n factors of sizes
/// u_1, ..., u_n (every u_a >= 2), plus the derived constants used
/// throughout.
struct SchemeParams {
    int n = 0;                  ///< number of factors
    std::vector<int> u;         ///< factor sizes, u[a-1] is the size of factor a
    RelIndex d = 0;             ///< top relation index, 2^n - 1
    int n2 = 0;                 ///< |{a : u_a > 2}|
    long long d1 = 1;           ///< 2^{|{a : u_a = 2}|} = number of valency-1 relations
    RelIndex tildeMask = 0;     ///< bitmask of the positions a with u_a > 2
    long long pointCount = 1;   ///< prod u_a

    /// Validates the factor sizes and fills in the derived constants.
    /// Throws std::invalid_argument on n < 1, u_a < 2, or n too large for
    /// the index type.
    static SchemeParams make(const std::vector<int>& factorSizes);

    int factorSize(int pos) const { return u.at(static_cast<std::size_t>(pos) - 1); }
};

inline void requireIndex(RelIndex g, RelIndex d) {
    if (g > d) throw std::invalid_argument("relation index out of range");
}

/// 1-based positions of the set bits of g.
std::vector<int> support(RelIndex g, int n);

/// The partial order on indices: g <= h iff the support of g is contained
/// in the support of h.
inline bool le2(RelIndex g, RelIndex h) { return (g & ~h) == 0; }

inline RelIndex join(RelIndex g, RelIndex h) { return g | h; }
inline RelIndex meet(RelIndex g, RelIndex h) { return g & h; }
inline RelIndex diff(RelIndex g, RelIndex h) { return g & ~h; }
inline RelIndex symdiff(RelIndex g, RelIndex h) { return g ^ h; }

inline int popcount(RelIndex g) { return std::popcount(g); }

/// The index supported on the positions of g whose factor has size > 2.
inline RelIndex tilde(RelIndex g, const SchemeParams& p) {
    requireIndex(g, p.d);
    return g & p.tildeMask;
}

/// g (.) h = (g (+) h) | tilde(g & h); the upper end of the window of
/// indices i with nonzero intersection number p_{gh}^i.
inline RelIndex odot(RelIndex g, RelIndex h, const SchemeParams& p) {
    requireIndex(g, p.d);
    requireIndex(h, p.d);
    return (g ^ h) | tilde(g & h, p);
}

/// The composite index (g (+) k) | (tilde(g & k) \ i) | ((h | j) & tilde(g & k) & i)
/// that names the product of two basis elements.  Always lies between
/// g (+) k and g (.) k.
inline RelIndex m5(RelIndex g, RelIndex h, RelIndex i, RelIndex j, RelIndex k,
                   const SchemeParams& p) {
    requireIndex(g, p.d);
    requireIndex(h, p.d);
    requireIndex(i, p.d);
    requireIndex(j, p.d);
    requireIndex(k, p.d);
    const RelIndex t = tilde(g & k, p);
    return (g ^ k) | (t & ~i) | ((h | j) & t & i);
}

/// Calls f(s) for every submask s of mask, in increasing numeric order.
template <typename F>
void forEachSubmask(RelIndex mask, F&& f) {
    RelIndex s = 0;
    while (true) {
        f(s);
        if (s == mask) break;
        s = (s - mask) & mask;  // next submask in increasing order
    }
}

/// Calls f(a) for every index a with lo <= a <= hi in the support order.
/// Requires le2(lo, hi).
template <typename F>
void forEachInInterval(RelIndex lo, RelIndex hi, F&& f) {
    if (!le2(lo, hi)) throw std::invalid_argument("empty support interval");
    forEachSubmask(hi & ~lo, [&](RelIndex s) { f(lo | s); });
}

}  // namespace terw
