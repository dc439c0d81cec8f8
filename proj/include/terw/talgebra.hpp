#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "terw/field.hpp"
#include "terw/matrix_oracle.hpp"
#include "terw/scheme.hpp"

namespace terw {

/// Index triple (g, h, i) of a basis element B_{g,h,i}.  Valid exactly
/// when g (+) h <= i <= g (.) h, i.e. when p_{gh}^i is nonzero.
struct BTriple {
    RelIndex g = 0;
    RelIndex h = 0;
    RelIndex i = 0;
    friend auto operator<=>(const BTriple&, const BTriple&) = default;
};

bool validTriple(const BTriple& t, const SchemeParams& p);
void requireValidTriple(const BTriple& t, const SchemeParams& p);

/// Element of the algebra as a sparse coefficient vector over basis
/// triples; zero coefficients are never stored, and the map order makes
/// every traversal deterministic.
class TElement {
public:
    const std::map<BTriple, FieldElem>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }

    void add(const Field& f, const BTriple& t, const FieldElem& v);
    FieldElem coeff(const BTriple& t) const;

    TElement plus(const Field& f, const TElement& o) const;
    TElement minus(const Field& f, const TElement& o) const;
    TElement scaled(const Field& f, const FieldElem& s) const;

    /// Drops every coefficient supported on the given predicate; used to
    /// pass to the quotient modulo the radical span.
    template <typename Pred>
    TElement dropWhere(Pred&& pred) const {
        TElement out;
        for (const auto& [t, v] : c_)
            if (!pred(t)) out.c_.emplace(t, v);
        return out;
    }

    friend bool operator==(const TElement&, const TElement&) = default;

private:
    std::map<BTriple, FieldElem> c_;
};

/// All valid basis triples in lexicographic order.
std::vector<BTriple> bTriples(const SchemeParams& p);

/// The closed-form dimension: the quadruple binomial sum.
long long dimFormula(const SchemeParams& p);

/// One-term product rule: B_{g,h,i} B_{l,j,k} = delta_{il} k_{h&i&j} B_{g,m,k}
/// with m = m5(g,h,i,j,k).
TElement bMul(const Field& f, const FactorialScheme& s, const BTriple& a, const BTriple& b);

/// Bilinear extension of bMul.
TElement tMul(const Field& f, const FactorialScheme& s, const TElement& a, const TElement& b);

/// The matrix realization of one basis element at the given base point.
FMatrix bToMatrix(const FactorialScheme& s, const Field& f, const BTriple& t, long long basePoint);
FMatrix tToMatrix(const FactorialScheme& s, const Field& f, const TElement& e, long long basePoint);
/// E_g* A_h E_i* directly from the scheme.
FMatrix eaeMatrix(const FactorialScheme& s, const Field& f, RelIndex g, RelIndex h, RelIndex i,
                  long long basePoint);

/// E_g* A_h E_i* expanded over the basis by inclusion-exclusion on the
/// window; requires p_{gh}^i != 0.
TElement eaeToB(const Field& f, const FactorialScheme& s, RelIndex g, RelIndex h, RelIndex i);

/// The central elements C_a, one per a <= tilde(d), paired with a.
std::vector<std::pair<RelIndex, TElement>> centerBasis(const Field& f, const FactorialScheme& s);
/// Expansion of a single C_g; requires g <= tilde(d).
TElement centerElement(const Field& f, const FactorialScheme& s, RelIndex g);
/// Closed-form product C_g C_h = k_{g&h} C_{g|h}; requires g|h <= tilde(d).
std::pair<FieldElem, RelIndex> cMul(const Field& f, const FactorialScheme& s, RelIndex g, RelIndex h);

/// The alternating-sum element D_{g,h,i}; requires a valid triple and
/// p not dividing k_h.
TElement dElement(const Field& f, const FactorialScheme& s, const BTriple& t);

/// Basis triples of the radical: the valid (a, b, c) with p | k_b.
std::vector<BTriple> radicalBasis(const Field& f, const FactorialScheme& s);
/// Nilpotency of the radical: 2 |{a : u_a = 1 (mod p)}| + 1.
int radicalNilpotency(const Field& f, const SchemeParams& p);
/// p does not divide k_d = prod (u_a - 1).
bool isSemisimple(const Field& f, const FactorialScheme& s);

/// The local algebra E_g* T E_g*: basis {B_{g,a,g} : a <= tilde(g)}, its
/// radical part, the nilpotency of that part, and the quotient dimension.
std::vector<BTriple> localBasis(RelIndex g, const SchemeParams& p);
std::vector<BTriple> localRadical(const Field& f, const FactorialScheme& s, RelIndex g);
int localNilpotency(const Field& f, const SchemeParams& p, RelIndex g);
long long localQuotientDim(const Field& f, const SchemeParams& p, RelIndex g);

/// One equivalence class of basis triples with invertible middle valency,
/// keyed by the common value of tilde(g & i) \ h.
struct ApproxClass {
    int classIndex = 0;                ///< 1-based, ascending signature order
    RelIndex signature = 0;
    std::vector<BTriple> triples;
    std::vector<RelIndex> diagIndices; ///< the a with (a, b, a) in the class
};

std::vector<ApproxClass> approxClasses(const Field& f, const FactorialScheme& s);

struct WedderburnType {
    std::vector<long long> blockSizes;  ///< descending
    long long radicalDim = 0;
};

WedderburnType wedderburnType(const Field& f, const FactorialScheme& s);

/// Sorted list of {"g","h","i","coeff"} with coefficients rendered by the
/// field, as a JSON array string.
std::string tElementJson(const Field& f, const TElement& e);

}  // namespace terw
