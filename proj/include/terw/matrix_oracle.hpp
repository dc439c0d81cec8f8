#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "terw/field.hpp"
#include "terw/scheme.hpp"

namespace terw {

/// Exact dense square matrix over the coefficient field, rows and columns
/// indexed by point encodings.
class FMatrix {
public:
    FMatrix(const Field& f, int size);
    static FMatrix identity(const Field& f, int size);

    int size() const { return n_; }
    const Field& field() const { return *f_; }

    const FieldElem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    FieldElem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    bool isZero() const;
    FMatrix transpose() const;
    FMatrix mul(const FMatrix& o) const;
    FMatrix add(const FMatrix& o) const;
    FMatrix scaled(const FieldElem& s) const;
    void addScaled(const FMatrix& o, const FieldElem& s);
    FieldElem trace() const;

    friend bool operator==(const FMatrix& a, const FMatrix& b) { return a.a_ == b.a_; }

private:
    const Field* f_;
    int n_;
    std::vector<FieldElem> a_;
};

/// Sparse coordinate vector: sorted (position, nonzero value) pairs.
using SparseRow = std::vector<std::pair<std::uint32_t, FieldElem>>;

SparseRow flatten(const FMatrix& m);
FMatrix unflatten(const Field& f, const SparseRow& row, int size);

/// Incremental reduced row echelon form over the field.  Rows keep their
/// insertion order; pivots are the first nonzero coordinate in row-major
/// entry order and are normalized to one, with pivot columns cleared in
/// every other row, so the basis is deterministic.
class RowSpace {
public:
    RowSpace(const Field& f, std::size_t width);

    int dim() const { return static_cast<int>(rows_.size()); }
    std::size_t width() const { return width_; }
    const SparseRow& row(int k) const { return rows_[static_cast<std::size_t>(k)]; }
    std::uint32_t pivot(int k) const { return rows_[static_cast<std::size_t>(k)].front().first; }

    /// Residual of v after eliminating every pivot.
    SparseRow reduce(SparseRow v) const;
    /// Inserts v if independent; returns the new row index or -1.
    int insert(SparseRow v);
    bool contains(const SparseRow& v) const { return reduce(v).empty(); }

    /// Coordinates of v over the stored rows, or nullopt if v is outside
    /// the span.
    std::optional<std::vector<FieldElem>> coords(const SparseRow& v) const;

private:
    const Field* f_;
    std::size_t width_;
    std::vector<SparseRow> rows_;
    std::vector<std::int32_t> pivotOfPos_;
};

/// A subalgebra presented by an echelonized basis of its matrix span,
/// produced by algebraClosure.  The span is closed under multiplication:
/// the closure procedure stops only when multiplying by every generator
/// lands back inside, which pins the whole algebra by induction on word
/// length.
struct SpannedAlgebra {
    const Field* field = nullptr;
    int matrixSize = 0;
    std::vector<FMatrix> generators;
    RowSpace span;
    int dim() const { return span.dim(); }
    FMatrix basisMatrix(int k) const;
};

/// Smallest unital subalgebra containing the generators.
SpannedAlgebra algebraClosure(const Field& f, const std::vector<FMatrix>& generators);

/// Dimension of the solution space of the commutation system.  Probes
/// defaults to the algebra's generators, which pin the same space as all
/// basis elements; tests cross-check the two.
int centerDim(const SpannedAlgebra& alg, const std::vector<FMatrix>* probes = nullptr);

/// Whether the span of the given matrices is a two-sided ideal of alg.
bool isTwoSidedIdeal(const std::vector<FMatrix>& span, const SpannedAlgebra& alg);

/// Smallest h with span^h = 0; 1 for the zero span.  Throws
/// std::runtime_error if no power vanishes within matrixSize^2 steps.
int nilpotencyIndex(const Field& f, const std::vector<FMatrix>& span, int matrixSize);

/// Rank of a list of dense coordinate rows.
int rankOfRows(const Field& f, std::vector<std::vector<FieldElem>> rows);

/// The 0/1 adjacency matrix of relation g.
FMatrix adjacencyMatrix(const FactorialScheme& s, const Field& f, RelIndex g);
/// The diagonal 0/1 projector onto the g-subconstituent of the base point.
FMatrix dualIdempotent(const FactorialScheme& s, const Field& f, RelIndex g, long long basePoint);
/// E_0..E_d followed by A_0..A_d at the given base point.
std::vector<FMatrix> subconstituentGenerators(const FactorialScheme& s, const Field& f,
                                              long long basePoint);

}  // namespace terw
