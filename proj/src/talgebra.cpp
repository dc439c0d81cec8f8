#include "terw/talgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace terw {

bool validTriple(const BTriple& t, const SchemeParams& p) {
    if (t.g > p.d || t.h > p.d || t.i > p.d) return false;
    return le2(t.g ^ t.h, t.i) && le2(t.i, odot(t.g, t.h, p));
}

void requireValidTriple(const BTriple& t, const SchemeParams& p) {
    if (!validTriple(t, p)) throw std::invalid_argument("invalid basis triple");
}

void TElement::add(const Field& f, const BTriple& t, const FieldElem& v) {
    if (v.isZero()) return;
    const auto it = c_.find(t);
    if (it == c_.end()) {
        c_.emplace(t, v);
        return;
    }
    it->second = f.add(it->second, v);
    if (it->second.isZero()) c_.erase(it);
}

FieldElem TElement::coeff(const BTriple& t) const {
    const auto it = c_.find(t);
    return it == c_.end() ? FieldElem() : it->second;
}

TElement TElement::plus(const Field& f, const TElement& o) const {
    TElement out = *this;
    for (const auto& [t, v] : o.c_) out.add(f, t, v);
    return out;
}

TElement TElement::minus(const Field& f, const TElement& o) const {
    TElement out = *this;
    for (const auto& [t, v] : o.c_) out.add(f, t, f.neg(v));
    return out;
}

TElement TElement::scaled(const Field& f, const FieldElem& s) const {
    TElement out;
    for (const auto& [t, v] : c_) out.add(f, t, f.mul(v, s));
    return out;
}

std::vector<BTriple> bTriples(const SchemeParams& p) {
    std::vector<BTriple> out;
    for (RelIndex g = 0; g <= p.d; ++g)
        for (RelIndex h = 0; h <= p.d; ++h)
            forEachInInterval(g ^ h, odot(g, h, p),
                              [&](RelIndex i) { out.push_back({g, h, i}); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

}  // namespace

long long dimFormula(const SchemeParams& p) {
    long long total = 0;
    for (int g = 0; g <= p.n2; ++g)
        for (int h = 0; h <= p.n - p.n2; ++h)
            for (int i = 0; i <= g; ++i)
                for (int j = 0; j <= h; ++j)
                    total += binom(p.n2, g) * binom(p.n - p.n2, h) * binom(g, i) *
                             binom(h, j) * (1LL << (p.n - g - h + i));
    return total;
}

TElement bMul(const Field& f, const FactorialScheme& s, const BTriple& a, const BTriple& b) {
    const SchemeParams& p = s.params();
    requireValidTriple(a, p);
    requireValidTriple(b, p);
    TElement out;
    if (a.i != b.g) return out;
    const FieldElem coeff = f.fromInt(s.valency(a.h & a.i & b.h));
    out.add(f, BTriple{a.g, m5(a.g, a.h, a.i, b.h, b.i, p), b.i}, coeff);
    return out;
}

TElement tMul(const Field& f, const FactorialScheme& s, const TElement& a, const TElement& b) {
    const SchemeParams& p = s.params();
    TElement out;
    for (const auto& [ta, va] : a.coeffs())
        for (const auto& [tb, vb] : b.coeffs()) {
            if (ta.i != tb.g) continue;
            const FieldElem coeff =
                f.mul(f.mul(va, vb), f.fromInt(s.valency(ta.h & ta.i & tb.h)));
            out.add(f, BTriple{ta.g, m5(ta.g, ta.h, ta.i, tb.h, tb.i, p), tb.i}, coeff);
        }
    return out;
}

FMatrix bToMatrix(const FactorialScheme& s, const Field& f, const BTriple& t, long long basePoint) {
    requireValidTriple(t, s.params());
    s.requireDeskScale("b_to_matrix");
    const int n = static_cast<int>(s.pointCount());
    const RelIndex lo = t.g ^ t.i;
    FMatrix m(f, n);
    for (int y = 0; y < n; ++y) {
        if (s.rel(basePoint, y) != t.g) continue;
        for (int z = 0; z < n; ++z) {
            if (s.rel(basePoint, z) != t.i) continue;
            const RelIndex j = s.rel(y, z);
            if (le2(lo, j) && le2(j, t.h)) m.at(y, z) = f.one();
        }
    }
    return m;
}

FMatrix tToMatrix(const FactorialScheme& s, const Field& f, const TElement& e, long long basePoint) {
    s.requireDeskScale("t_to_matrix");
    FMatrix m(f, static_cast<int>(s.pointCount()));
    for (const auto& [t, v] : e.coeffs()) m.addScaled(bToMatrix(s, f, t, basePoint), v);
    return m;
}

FMatrix eaeMatrix(const FactorialScheme& s, const Field& f, RelIndex g, RelIndex h, RelIndex i,
                  long long basePoint) {
    s.requireDeskScale("eae_matrix");
    const int n = static_cast<int>(s.pointCount());
    FMatrix m(f, n);
    for (int y = 0; y < n; ++y) {
        if (s.rel(basePoint, y) != g) continue;
        for (int z = 0; z < n; ++z)
            if (s.rel(basePoint, z) == i && s.rel(y, z) == h) m.at(y, z) = f.one();
    }
    return m;
}

TElement eaeToB(const Field& f, const FactorialScheme& s, RelIndex g, RelIndex h, RelIndex i) {
    if (s.intersectionNumber(g, h, i) == 0)
        throw std::invalid_argument("E*AE* expansion needs a nonzero intersection number");
    TElement out;
    const int hBits = popcount(h);
    forEachInInterval(g ^ i, h, [&](RelIndex j) {
        const FieldElem sign = f.fromInt((hBits - popcount(j)) % 2 == 0 ? 1 : -1);
        out.add(f, BTriple{g, j, i}, sign);
    });
    return out;
}

TElement centerElement(const Field& f, const FactorialScheme& s, RelIndex g) {
    const SchemeParams& p = s.params();
    if (!le2(g, p.tildeMask))
        throw std::invalid_argument("central elements are indexed by a <= tilde(d)");
    TElement out;
    for (RelIndex i = 0; i <= p.d; ++i)
        out.add(f, BTriple{i, g & i, i}, f.fromInt(s.valency(g & ~i)));
    return out;
}

std::vector<std::pair<RelIndex, TElement>> centerBasis(const Field& f, const FactorialScheme& s) {
    std::vector<std::pair<RelIndex, TElement>> out;
    forEachSubmask(s.params().tildeMask,
                   [&](RelIndex a) { out.push_back({a, centerElement(f, s, a)}); });
    return out;
}

std::pair<FieldElem, RelIndex> cMul(const Field& f, const FactorialScheme& s, RelIndex g,
                                    RelIndex h) {
    const SchemeParams& p = s.params();
    if (!le2(g | h, p.tildeMask))
        throw std::invalid_argument("central product needs g|h <= tilde(d)");
    return {f.fromInt(s.valency(g & h)), g | h};
}

TElement dElement(const Field& f, const FactorialScheme& s, const BTriple& t) {
    const SchemeParams& p = s.params();
    requireValidTriple(t, p);
    if (f.divides(s.valency(t.h)))
        throw std::invalid_argument("D elements need p not dividing the middle valency");
    const RelIndex top = odot(t.g, t.i, p);  // the window end g (.) i
    // free positions: in the window above h, with u_a not congruent to 1
    RelIndex freeMask = 0;
    for (int a = 0; a < p.n; ++a) {
        const RelIndex bit = RelIndex{1} << a;
        if ((top & bit) && !(t.h & bit) && !f.congruentOne(p.u[static_cast<std::size_t>(a)]))
            freeMask |= bit;
    }
    TElement out;
    forEachSubmask(freeMask, [&](RelIndex extra) {
        const RelIndex m = t.h | extra;
        const FieldElem sign = f.fromInt(popcount(extra) % 2 == 0 ? 1 : -1);
        const FieldElem coeff = f.mul(sign, f.inv(f.fromInt(s.valency(t.i & m))));
        out.add(f, BTriple{t.g, m, t.i}, coeff);
    });
    return out;
}

std::vector<BTriple> radicalBasis(const Field& f, const FactorialScheme& s) {
    std::vector<BTriple> out;
    for (const BTriple& t : bTriples(s.params()))
        if (f.divides(s.valency(t.h))) out.push_back(t);
    return out;
}

int radicalNilpotency(const Field& f, const SchemeParams& p) {
    int count = 0;
    for (int a = 0; a < p.n; ++a)
        if (f.congruentOne(p.u[static_cast<std::size_t>(a)])) ++count;
    return 2 * count + 1;
}

bool isSemisimple(const Field& f, const FactorialScheme& s) {
    return !f.divides(s.valency(s.params().d));
}

std::vector<BTriple> localBasis(RelIndex g, const SchemeParams& p) {
    requireIndex(g, p.d);
    std::vector<BTriple> out;
    forEachSubmask(tilde(g, p), [&](RelIndex a) { out.push_back({g, a, g}); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BTriple> localRadical(const Field& f, const FactorialScheme& s, RelIndex g) {
    std::vector<BTriple> out;
    for (const BTriple& t : localBasis(g, s.params()))
        if (f.divides(s.valency(t.h))) out.push_back(t);
    return out;
}

int localNilpotency(const Field& f, const SchemeParams& p, RelIndex g) {
    requireIndex(g, p.d);
    int count = 0;
    for (int a = 0; a < p.n; ++a)
        if ((g & (RelIndex{1} << a)) && f.congruentOne(p.u[static_cast<std::size_t>(a)]))
            ++count;
    return count + 1;
}

long long localQuotientDim(const Field& f, const SchemeParams& p, RelIndex g) {
    requireIndex(g, p.d);
    int count = 0;
    for (int a = 0; a < p.n; ++a) {
        const RelIndex bit = RelIndex{1} << a;
        if ((tilde(g, p) & bit) && !f.congruentOne(p.u[static_cast<std::size_t>(a)])) ++count;
    }
    return 1LL << count;
}

std::vector<ApproxClass> approxClasses(const Field& f, const FactorialScheme& s) {
    const SchemeParams& p = s.params();
    std::map<RelIndex, ApproxClass> bySig;
    for (const BTriple& t : bTriples(p)) {
        if (f.divides(s.valency(t.h))) continue;
        const RelIndex sig = tilde(t.g & t.i, p) & ~t.h;
        auto& cls = bySig[sig];
        cls.signature = sig;
        cls.triples.push_back(t);
        if (t.g == t.i) cls.diagIndices.push_back(t.g);
    }
    std::vector<ApproxClass> out;
    int idx = 1;
    for (auto& [sig, cls] : bySig) {
        std::sort(cls.diagIndices.begin(), cls.diagIndices.end());
        cls.diagIndices.erase(std::unique(cls.diagIndices.begin(), cls.diagIndices.end()),
                              cls.diagIndices.end());
        cls.classIndex = idx++;
        out.push_back(std::move(cls));
    }
    return out;
}

WedderburnType wedderburnType(const Field& f, const FactorialScheme& s) {
    WedderburnType w;
    w.radicalDim = static_cast<long long>(radicalBasis(f, s).size());
    for (const ApproxClass& cls : approxClasses(f, s))
        w.blockSizes.push_back(static_cast<long long>(cls.diagIndices.size()));
    std::sort(w.blockSizes.rbegin(), w.blockSizes.rend());
    long long squares = 0;
    for (const long long b : w.blockSizes) squares += b * b;
    if (w.radicalDim + squares != dimFormula(s.params()))
        throw std::logic_error("block sizes and radical do not add up to the dimension");
    return w;
}

std::string tElementJson(const Field& f, const TElement& e) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [t, v] : e.coeffs()) {
        if (!first) os << ",";
        first = false;
        os << "{\"g\":" << t.g << ",\"h\":" << t.h << ",\"i\":" << t.i << ",\"coeff\":\""
           << f.str(v) << "\"}";
    }
    os << "]";
    return os.str();
}

}  // namespace terw
