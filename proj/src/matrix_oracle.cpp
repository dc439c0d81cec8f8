#include "terw/matrix_oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace terw {

FMatrix::FMatrix(const Field& f, int size)
    : f_(&f), n_(size), a_(static_cast<std::size_t>(size) * size) {
    if (size <= 0) throw std::invalid_argument("matrix size must be positive");
}

FMatrix FMatrix::identity(const Field& f, int size) {
    FMatrix m(f, size);
    for (int r = 0; r < size; ++r) m.at(r, r) = f.one();
    return m;
}

bool FMatrix::isZero() const {
    return std::all_of(a_.begin(), a_.end(), [](const FieldElem& e) { return e.isZero(); });
}

FMatrix FMatrix::transpose() const {
    FMatrix m(*f_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m.at(c, r) = at(r, c);
    return m;
}

FMatrix FMatrix::mul(const FMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    FMatrix out(*f_, n_);
    for (int r = 0; r < n_; ++r)
        for (int k = 0; k < n_; ++k) {
            const FieldElem& a = at(r, k);
            if (a.isZero()) continue;
            for (int c = 0; c < n_; ++c) {
                const FieldElem& b = o.at(k, c);
                if (b.isZero()) continue;
                out.at(r, c) = f_->add(out.at(r, c), f_->mul(a, b));
            }
        }
    return out;
}

FMatrix FMatrix::add(const FMatrix& o) const {
    FMatrix out(*f_, n_);
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] = f_->add(a_[t], o.a_[t]);
    return out;
}

FMatrix FMatrix::scaled(const FieldElem& s) const {
    FMatrix out(*f_, n_);
    for (std::size_t t = 0; t < a_.size(); ++t) out.a_[t] = f_->mul(a_[t], s);
    return out;
}

void FMatrix::addScaled(const FMatrix& o, const FieldElem& s) {
    for (std::size_t t = 0; t < a_.size(); ++t) a_[t] = f_->add(a_[t], f_->mul(o.a_[t], s));
}

FieldElem FMatrix::trace() const {
    FieldElem t;
    for (int r = 0; r < n_; ++r) t = f_->add(t, at(r, r));
    return t;
}

SparseRow flatten(const FMatrix& m) {
    SparseRow out;
    const int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const FieldElem& e = m.at(r, c);
            if (!e.isZero()) out.push_back({static_cast<std::uint32_t>(r * n + c), e});
        }
    return out;
}

FMatrix unflatten(const Field& f, const SparseRow& row, int size) {
    FMatrix m(f, size);
    for (const auto& [pos, val] : row)
        m.at(static_cast<int>(pos) / size, static_cast<int>(pos) % size) = val;
    return m;
}

RowSpace::RowSpace(const Field& f, std::size_t width)
    : f_(&f), width_(width), pivotOfPos_(width, -1) {}

namespace {

// a[ai..] - c * b, both inputs sorted; result sorted, zero entries dropped
SparseRow axpyTail(const Field& f, const SparseRow& a, std::size_t ai, const SparseRow& b,
                   const FieldElem& c) {
    SparseRow out;
    out.reserve(a.size() - ai + b.size());
    std::size_t i = ai, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            FieldElem t = f.neg(f.mul(c, b[j].second));
            if (!t.isZero()) out.push_back({b[j].first, std::move(t)});
            ++j;
        } else {
            FieldElem t = f.sub(a[i].second, f.mul(c, b[j].second));
            if (!t.isZero()) out.push_back({a[i].first, std::move(t)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow RowSpace::reduce(SparseRow v) const {
    SparseRow out;
    std::size_t i = 0;
    while (i < v.size()) {
        const std::uint32_t pos = v[i].first;
        const std::int32_t r = pivotOfPos_[pos];
        if (r < 0) {
            out.push_back(v[i]);
            ++i;
        } else {
            v = axpyTail(*f_, v, i, rows_[static_cast<std::size_t>(r)], v[i].second);
            i = 0;
        }
    }
    return out;
}

int RowSpace::insert(SparseRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return -1;
    const FieldElem lead = v.front().second;
    if (!(lead == f_->one())) {
        const FieldElem il = f_->inv(lead);
        for (auto& e : v) e.second = f_->mul(e.second, il);
    }
    const std::uint32_t piv = v.front().first;
    for (auto& row : rows_) {
        const auto it = std::lower_bound(
            row.begin(), row.end(), piv,
            [](const auto& e, std::uint32_t p) { return e.first < p; });
        if (it != row.end() && it->first == piv) row = axpyTail(*f_, row, 0, v, it->second);
    }
    const int idx = static_cast<int>(rows_.size());
    pivotOfPos_[piv] = idx;
    rows_.push_back(std::move(v));
    return idx;
}

std::optional<std::vector<FieldElem>> RowSpace::coords(const SparseRow& v) const {
    // pivot columns are cleared in all other rows, so the coordinate over
    // row k is just the value of v at its pivot
    std::vector<FieldElem> c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::uint32_t piv = rows_[k].front().first;
        const auto it = std::lower_bound(
            v.begin(), v.end(), piv,
            [](const auto& e, std::uint32_t p) { return e.first < p; });
        if (it != v.end() && it->first == piv) c[k] = it->second;
    }
    // verify the combination reproduces v
    SparseRow acc;
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (!c[k].isZero()) acc = axpyTail(*f_, acc, 0, rows_[k], f_->neg(c[k]));
    if (acc != v) return std::nullopt;
    return c;
}

FMatrix SpannedAlgebra::basisMatrix(int k) const {
    return unflatten(*field, span.row(k), matrixSize);
}

SpannedAlgebra algebraClosure(const Field& f, const std::vector<FMatrix>& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    const int n = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != n) throw std::invalid_argument("generator size mismatch");

    SpannedAlgebra alg{&f, n, generators, RowSpace(f, static_cast<std::size_t>(n) * n)};
    std::deque<FMatrix> work;
    const auto tryInsert = [&](const FMatrix& m) {
        const int idx = alg.span.insert(flatten(m));
        if (idx >= 0) work.push_back(unflatten(f, alg.span.row(idx), n));
    };
    tryInsert(FMatrix::identity(f, n));
    for (const auto& g : generators) tryInsert(g);
    while (!work.empty()) {
        const FMatrix m = std::move(work.front());
        work.pop_front();
        for (const auto& g : generators) {
            tryInsert(g.mul(m));
            tryInsert(m.mul(g));
        }
    }
    return alg;
}

int rankOfRows(const Field& f, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t w = rows.front().size();
    RowSpace space(f, w);
    for (auto& r : rows) {
        SparseRow v;
        for (std::size_t j = 0; j < w; ++j)
            if (!r[j].isZero()) v.push_back({static_cast<std::uint32_t>(j), r[j]});
        space.insert(std::move(v));
    }
    return space.dim();
}

int centerDim(const SpannedAlgebra& alg, const std::vector<FMatrix>* probes) {
    const Field& f = *alg.field;
    const std::vector<FMatrix>& ps = probes ? *probes : alg.generators;
    const int dim = alg.dim();
    std::vector<FMatrix> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) basis.push_back(alg.basisMatrix(k));

    std::vector<std::vector<FieldElem>> rows;
    for (const auto& g : ps) {
        // coordinates of each commutator [b_j, g] over the algebra basis
        std::vector<std::vector<FieldElem>> comm(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            FMatrix c = basis[static_cast<std::size_t>(j)].mul(g);
            c.addScaled(g.mul(basis[static_cast<std::size_t>(j)]), f.fromInt(-1));
            const auto co = alg.span.coords(flatten(c));
            if (!co) throw std::logic_error("commutator escaped the algebra span");
            comm[static_cast<std::size_t>(j)] = *co;
        }
        for (int k = 0; k < dim; ++k) {
            std::vector<FieldElem> row(static_cast<std::size_t>(dim));
            bool nonzero = false;
            for (int j = 0; j < dim; ++j) {
                row[static_cast<std::size_t>(j)] = comm[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                nonzero = nonzero || !row[static_cast<std::size_t>(j)].isZero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return dim - rankOfRows(f, std::move(rows));
}

bool isTwoSidedIdeal(const std::vector<FMatrix>& span, const SpannedAlgebra& alg) {
    const Field& f = *alg.field;
    RowSpace s(f, static_cast<std::size_t>(alg.matrixSize) * alg.matrixSize);
    std::vector<FMatrix> sbasis;
    for (const auto& m : span) {
        const int idx = s.insert(flatten(m));
        if (idx >= 0) sbasis.push_back(unflatten(f, s.row(idx), alg.matrixSize));
    }
    for (int k = 0; k < alg.dim(); ++k) {
        const FMatrix b = alg.basisMatrix(k);
        for (const auto& m : sbasis) {
            if (!s.contains(flatten(b.mul(m)))) return false;
            if (!s.contains(flatten(m.mul(b)))) return false;
        }
    }
    return true;
}

int nilpotencyIndex(const Field& f, const std::vector<FMatrix>& span, int matrixSize) {
    const std::size_t width = static_cast<std::size_t>(matrixSize) * matrixSize;
    RowSpace s1(f, width);
    std::vector<FMatrix> base;
    for (const auto& m : span) {
        const int idx = s1.insert(flatten(m));
        if (idx >= 0) base.push_back(unflatten(f, s1.row(idx), matrixSize));
    }
    if (base.empty()) return 1;
    std::vector<FMatrix> cur = base;
    int h = 1;
    while (true) {
        RowSpace next(f, width);
        std::vector<FMatrix> nb;
        for (const auto& a : cur)
            for (const auto& b : base) {
                const int idx = next.insert(flatten(a.mul(b)));
                if (idx >= 0) nb.push_back(unflatten(f, next.row(idx), matrixSize));
            }
        ++h;
        if (nb.empty()) return h;
        if (h > matrixSize * matrixSize)
            throw std::runtime_error("span is not nilpotent");
        cur = std::move(nb);
    }
}

FMatrix adjacencyMatrix(const FactorialScheme& s, const Field& f, RelIndex g) {
    requireIndex(g, s.params().d);
    s.requireDeskScale("adjacency_matrix");
    const int n = static_cast<int>(s.pointCount());
    FMatrix m(f, n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            if (s.rel(y, z) == g) m.at(y, z) = f.one();
    return m;
}

FMatrix dualIdempotent(const FactorialScheme& s, const Field& f, RelIndex g, long long basePoint) {
    requireIndex(g, s.params().d);
    s.requireDeskScale("dual_idempotent");
    const int n = static_cast<int>(s.pointCount());
    FMatrix m(f, n);
    for (int y = 0; y < n; ++y)
        if (s.rel(basePoint, y) == g) m.at(y, y) = f.one();
    return m;
}

std::vector<FMatrix> subconstituentGenerators(const FactorialScheme& s, const Field& f,
                                              long long basePoint) {
    std::vector<FMatrix> gens;
    for (RelIndex g = 0; g <= s.params().d; ++g) gens.push_back(dualIdempotent(s, f, g, basePoint));
    for (RelIndex g = 0; g <= s.params().d; ++g) gens.push_back(adjacencyMatrix(s, f, g));
    return gens;
}

}  // namespace terw
