#include <doctest.h>

#include "terw/matrix_oracle.hpp"
#include "terw/talgebra.hpp"

using namespace terw;

namespace {

FactorialScheme s23() { return FactorialScheme(SchemeParams::make({2, 3})); }

}  // namespace

TEST_CASE("adjacency matrices") {
    const auto s = s23();
    const Field f(0);
    const int n = static_cast<int>(s.pointCount());
    CHECK(adjacencyMatrix(s, f, 0) == FMatrix::identity(f, n));
    FMatrix sum(f, n);
    for (RelIndex g = 0; g <= 3; ++g) sum = sum.add(adjacencyMatrix(s, f, g));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) CHECK(sum.at(r, c) == f.one());
    // A_1 swaps the first coordinate: a permutation matrix
    const FMatrix a1 = adjacencyMatrix(s, f, 1);
    CHECK(a1.transpose() == a1);
    CHECK(a1.mul(a1) == FMatrix::identity(f, n));
    for (int r = 0; r < n; ++r) {
        int ones = 0;
        for (int c = 0; c < n; ++c)
            if (!a1.at(r, c).isZero()) ++ones;
        CHECK(ones == 1);
    }
}

TEST_CASE("dual idempotents") {
    const auto s = s23();
    const Field f(5);
    const int n = static_cast<int>(s.pointCount());
    const long long x = 0;
    const FMatrix e0 = dualIdempotent(s, f, 0, x);
    int ones = 0;
    for (int r = 0; r < n; ++r)
        if (!e0.at(r, r).isZero()) ++ones;
    CHECK(ones == 1);
    CHECK(!e0.at(0, 0).isZero());
    FMatrix sum(f, n);
    for (RelIndex g = 0; g <= 3; ++g) {
        const FMatrix eg = dualIdempotent(s, f, g, x);
        CHECK(eg.trace() == f.fromInt(s.valency(g)));
        sum = sum.add(eg);
        for (RelIndex h = 0; h <= 3; ++h) {
            const FMatrix prod = eg.mul(dualIdempotent(s, f, h, x));
            if (g == h) CHECK(prod == eg);
            else CHECK(prod.isZero());
        }
    }
    CHECK(sum == FMatrix::identity(f, n));
}

TEST_CASE("row space echelon") {
    const Field f(5);
    RowSpace rs(f, 4);
    CHECK(rs.insert({{0, f.fromInt(2)}, {2, f.fromInt(1)}}) == 0);
    CHECK(rs.insert({{0, f.fromInt(4)}, {2, f.fromInt(2)}}) == -1);
    CHECK(rs.insert({{1, f.fromInt(1)}, {2, f.fromInt(3)}}) == 1);
    CHECK(rs.dim() == 2);
    // row0 normalizes to {0:1, 2:3}; row0 + row1 = {0:1, 1:1, 2:1}
    CHECK(rs.contains({{0, f.fromInt(1)}, {1, f.fromInt(1)}, {2, f.fromInt(1)}}));
    CHECK_FALSE(rs.contains({{3, f.one()}}));
    const auto co = rs.coords({{0, f.fromInt(2)}, {2, f.fromInt(1)}});
    REQUIRE(co.has_value());
    CHECK((*co)[0] == f.fromInt(2));
    CHECK(rs.coords({{3, f.one()}}) == std::nullopt);
}

TEST_CASE("algebra closure dimensions") {
    for (const long long p : {0LL, 2LL, 3LL}) {
        const Field f(p);
        const auto s = s23();
        const auto alg = algebraClosure(f, subconstituentGenerators(s, f, 0));
        CHECK(alg.dim() == 20);
    }
    const Field f(0);
    const FactorialScheme two(SchemeParams::make({2}));
    CHECK(algebraClosure(f, subconstituentGenerators(two, f, 0)).dim() == 4);
    const FactorialScheme three(SchemeParams::make({3}));
    CHECK(algebraClosure(f, subconstituentGenerators(three, f, 0)).dim() == 5);
}

TEST_CASE("closure dimension is base-point independent") {
    const Field f(2);
    const auto s = s23();
    for (long long x = 0; x < s.pointCount(); ++x)
        CHECK(algebraClosure(f, subconstituentGenerators(s, f, x)).dim() == 20);
}

TEST_CASE("center dimensions") {
    const auto s = s23();
    for (const long long p : {0LL, 2LL}) {
        const Field f(p);
        const auto alg = algebraClosure(f, subconstituentGenerators(s, f, 0));
        CHECK(centerDim(alg) == 2);
        // probing with the full basis pins the same space
        std::vector<FMatrix> allBasis;
        for (int k = 0; k < alg.dim(); ++k) allBasis.push_back(alg.basisMatrix(k));
        CHECK(centerDim(alg, &allBasis) == 2);
    }
    // the full 2x2 matrix algebra has a one-dimensional center
    const Field f3(3);
    FMatrix e12(f3, 2), e21(f3, 2);
    e12.at(0, 1) = f3.one();
    e21.at(1, 0) = f3.one();
    const auto m2 = algebraClosure(f3, {e12, e21});
    CHECK(m2.dim() == 4);
    CHECK(centerDim(m2) == 1);
}

TEST_CASE("ideal membership certificate") {
    const Field f(2);
    const auto s = s23();
    const auto alg = algebraClosure(f, subconstituentGenerators(s, f, 0));
    // the radical span is a two-sided ideal
    std::vector<FMatrix> radical;
    for (const BTriple& t : radicalBasis(f, s)) radical.push_back(bToMatrix(s, f, t, 0));
    CHECK(radical.size() == 12);
    CHECK(isTwoSidedIdeal(radical, alg));
    // the zero span trivially is
    CHECK(isTwoSidedIdeal({}, alg));
    // a single dual idempotent is not
    CHECK_FALSE(isTwoSidedIdeal({bToMatrix(s, f, {0, 0, 0}, 0)}, alg));
}

TEST_CASE("nilpotency index") {
    const Field f(2);
    CHECK(nilpotencyIndex(f, {}, 2) == 1);
    FMatrix upper(f, 2);
    upper.at(0, 1) = f.one();
    CHECK(nilpotencyIndex(f, {upper}, 2) == 2);
    CHECK_THROWS_AS(nilpotencyIndex(f, {FMatrix::identity(f, 2)}, 2), std::runtime_error);

    const auto s = s23();
    std::vector<FMatrix> radical;
    for (const BTriple& t : radicalBasis(f, s)) radical.push_back(bToMatrix(s, f, t, 0));
    CHECK(nilpotencyIndex(f, radical, 6) == 3);
}
