#include "terw/report.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "terw/field.hpp"
#include "terw/matrix_oracle.hpp"
#include "terw/talgebra.hpp"

namespace terw {

namespace {

std::string ratioString(long long num, long long den) {
    const long long g = std::gcd(num, den);
    return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string describeTriple(const BTriple& t) {
    std::ostringstream os;
    os << "(" << t.g << "," << t.h << "," << t.i << ")";
    return os.str();
}

}  // namespace

Report runReport(const std::vector<int>& u, long long p,
                 const std::optional<std::string>& basePoint) {
    const SchemeParams params = SchemeParams::make(u);
    const Field field(p);
    const FactorialScheme scheme(params);

    Report r;
    r.n = params.n;
    r.u = u;
    r.p = p;
    r.d = params.d;
    r.n2 = params.n2;
    r.d1 = params.d1;
    for (RelIndex g = 0; g <= params.d; ++g) r.valencies.push_back(scheme.valency(g));
    r.dimT = dimFormula(params);
    r.dimZ = 1LL << params.n2;
    const int m = params.n - params.n2;  // log2(d1)
    r.stronglyNormalCount = galoisNumberG2(m);
    r.closedSubsetCount = (1LL << params.n2) * r.stronglyNormalCount;
    r.semisimple = isSemisimple(field, scheme);
    const WedderburnType w = wedderburnType(field, scheme);
    r.radicalDim = w.radicalDim;
    r.wedderburnBlocks = w.blockSizes;
    r.radicalNilpotency = radicalNilpotency(field, params);
    r.irreducibleCount = static_cast<long long>(w.blockSizes.size());
    r.centerProbabilityCheck = ratioString(r.stronglyNormalCount, r.closedSubsetCount);
    r.basePoint = basePoint ? scheme.renderPoint(scheme.parsePoint(*basePoint))
                            : scheme.renderPoint(0);
    return r;
}

std::string reportJson(const Report& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", r.n}, {"u", r.u}, {"p", r.p}};
    j["d"] = r.d;
    j["n2"] = r.n2;
    j["d1"] = r.d1;
    j["valencies"] = r.valencies;
    j["dimT"] = r.dimT;
    j["dimZ"] = r.dimZ;
    j["closedSubsetCount"] = r.closedSubsetCount;
    j["stronglyNormalCount"] = r.stronglyNormalCount;
    j["semisimple"] = r.semisimple;
    j["radicalDim"] = r.radicalDim;
    j["radicalNilpotency"] = r.radicalNilpotency;
    j["wedderburnBlocks"] = r.wedderburnBlocks;
    j["irreducibleCount"] = r.irreducibleCount;
    j["centerProbabilityCheck"] = r.centerProbabilityCheck;
    j["basePoint"] = r.basePoint;
    return j.dump(2) + "\n";
}

std::string verifyJson(const std::vector<int>& u, long long p, const VerifyResult& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"u", u}, {"p", p}};
    j["overall"] = r.overall;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        arr.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

VerifyResult runVerify(const std::vector<int>& u, long long p, long long maxPoints,
                       std::ostream* progress) {
    VerifyResult res;
    const SchemeParams params = SchemeParams::make(u);
    const Field field(p);
    FactorialScheme scheme(params, maxPoints);
    scheme.requireDeskScale("verify");
    const int nPts = static_cast<int>(scheme.pointCount());
    const long long x0 = 0;
    const RelIndex d = params.d;
    const Report report = runReport(u, p);

    const auto runCheck = [&](const std::string& name, auto&& body) {
        if (!res.overall) return;
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (progress)
            (*progress) << (ok ? "  ok   " : "  FAIL ") << name << " (" << ms << " ms)"
                        << (detail.empty() ? "" : " - " + detail) << std::endl;
        res.checks.push_back({name, ok, detail});
        res.overall = res.overall && ok;
    };

    // shared oracle state, filled as the checks advance
    std::vector<FMatrix> A, E;
    std::optional<SpannedAlgebra> alg;
    const std::vector<BTriple> basis = bTriples(params);
    std::map<BTriple, int> basisIndex;
    for (std::size_t t = 0; t < basis.size(); ++t)
        basisIndex[basis[t]] = static_cast<int>(t);
    std::vector<FMatrix> basisMats;

    runCheck("scheme-axioms", [&](std::string& detail) {
        for (int x = 0; x < nPts; ++x)
            for (int y = 0; y < nPts; ++y) {
                const RelIndex gxy = scheme.rel(x, y);
                if (gxy != scheme.rel(y, x)) {
                    detail = "rel not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                    return false;
                }
                if ((gxy == 0) != (x == y)) {
                    detail = "diagonal relation wrong at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                    return false;
                }
            }
        for (RelIndex g = 0; g <= d; ++g) {
            A.push_back(adjacencyMatrix(scheme, field, g));
            E.push_back(dualIdempotent(scheme, field, g, x0));
        }
        const FMatrix id = FMatrix::identity(field, nPts);
        if (!(A[0] == id)) {
            detail = "A_0 is not the identity";
            return false;
        }
        FMatrix sumA(field, nPts), sumE(field, nPts), allOnes(field, nPts);
        for (RelIndex g = 0; g <= d; ++g) {
            sumA = sumA.add(A[g]);
            sumE = sumE.add(E[g]);
        }
        for (int r = 0; r < nPts; ++r)
            for (int c = 0; c < nPts; ++c) allOnes.at(r, c) = field.one();
        if (!(sumA == allOnes)) {
            detail = "adjacency matrices do not sum to the all-ones matrix";
            return false;
        }
        if (!(sumE == id)) {
            detail = "dual idempotents do not sum to the identity";
            return false;
        }
        for (RelIndex g = 0; g <= d; ++g) {
            if (!(A[g].transpose() == A[g])) {
                detail = "A_" + std::to_string(g) + " is not symmetric";
                return false;
            }
            if (!(E[g].trace() == field.fromInt(scheme.valency(g)))) {
                detail = "trace of E_" + std::to_string(g) + "* is not the valency";
                return false;
            }
            for (RelIndex h = 0; h <= d; ++h) {
                const FMatrix prod = E[g].mul(E[h]);
                const bool ok = (g == h) ? prod == E[g] : prod.isZero();
                if (!ok) {
                    detail = "dual idempotent orthogonality fails at (" + std::to_string(g) +
                             "," + std::to_string(h) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    runCheck("valency-formula", [&](std::string& detail) {
        std::vector<long long> count(d + 1);
        for (int x = 0; x < nPts; ++x) {
            std::fill(count.begin(), count.end(), 0);
            for (int y = 0; y < nPts; ++y) ++count[scheme.rel(x, y)];
            for (RelIndex g = 0; g <= d; ++g)
                if (count[g] != scheme.valency(g)) {
                    detail = "|xR_g| != k_g at x=" + std::to_string(x) + ", g=" + std::to_string(g);
                    return false;
                }
        }
        return true;
    });

    runCheck("intersection-numbers", [&](std::string& detail) {
        // every ordered pair, so this also proves the counts do not depend
        // on the representative pair
        std::vector<long long> cnt(static_cast<std::size_t>(d + 1) * (d + 1));
        for (int x = 0; x < nPts; ++x)
            for (int y = 0; y < nPts; ++y) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (int a = 0; a < nPts; ++a)
                    ++cnt[static_cast<std::size_t>(scheme.rel(x, a)) * (d + 1) + scheme.rel(a, y)];
                const RelIndex i = scheme.rel(x, y);
                for (RelIndex g = 0; g <= d; ++g)
                    for (RelIndex h = 0; h <= d; ++h)
                        if (cnt[static_cast<std::size_t>(g) * (d + 1) + h] !=
                            scheme.intersectionNumber(g, h, i)) {
                            detail = "p_{" + std::to_string(g) + "," + std::to_string(h) + "}^" +
                                     std::to_string(i) + " wrong at pair (" + std::to_string(x) +
                                     "," + std::to_string(y) + ")";
                            return false;
                        }
            }
        for (RelIndex g = 0; g <= d; ++g)
            for (RelIndex h = 0; h <= d; ++h)
                for (RelIndex i = 0; i <= d; ++i)
                    if (scheme.intersectionNumber(g, h, i) != scheme.intersectionNumberOracle(g, h, i)) {
                        detail = "representative-pair oracle disagrees at (" + std::to_string(g) +
                                 "," + std::to_string(h) + "," + std::to_string(i) + ")";
                        return false;
                    }
        return true;
    });

    runCheck("valency-identities", [&](std::string& detail) {
        for (RelIndex g = 0; g <= d; ++g)
            for (RelIndex h = 0; h <= d; ++h) {
                for (RelIndex i = 0; i <= d; ++i) {
                    const long long a = scheme.valency(g) * scheme.intersectionNumber(h, i, g);
                    const long long b = scheme.valency(h) * scheme.intersectionNumber(g, i, h);
                    const long long c = scheme.valency(i) * scheme.intersectionNumber(h, g, i);
                    if (a != b || b != c) {
                        detail = "valency identity fails at (" + std::to_string(g) + "," +
                                 std::to_string(h) + "," + std::to_string(i) + ")";
                        return false;
                    }
                }
                long long sum = 0;
                for (RelIndex i = 0; i <= d; ++i)
                    sum += scheme.intersectionNumber(g, h, i) * scheme.valency(i);
                if (sum != scheme.valency(g) * scheme.valency(h)) {
                    detail = "sum rule fails at (" + std::to_string(g) + "," + std::to_string(h) + ")";
                    return false;
                }
            }
        return true;
    });

    runCheck("triple-regularity", [&](std::string& detail) {
        if (nPts > 36 || params.n > 3) {
            detail = "skipped: exhaustive scan runs for |X| <= 36, n <= 3";
            return true;
        }
        const std::size_t D1 = d + 1;
        const std::size_t cube = D1 * D1 * D1;
        std::vector<long long> table(cube * cube, -1);
        std::vector<long long> loc(cube);
        for (int x = 0; x < nPts; ++x)
            for (int y = 0; y < nPts; ++y)
                for (int z = 0; z < nPts; ++z) {
                    std::fill(loc.begin(), loc.end(), 0);
                    for (int w = 0; w < nPts; ++w)
                        ++loc[(static_cast<std::size_t>(scheme.rel(x, w)) * D1 + scheme.rel(y, w)) * D1 +
                              scheme.rel(z, w)];
                    const std::size_t base =
                        ((static_cast<std::size_t>(scheme.rel(x, y)) * D1 + scheme.rel(x, z)) * D1 +
                         scheme.rel(y, z)) *
                        cube;
                    for (std::size_t t = 0; t < cube; ++t) {
                        long long& slot = table[base + t];
                        if (slot < 0) slot = loc[t];
                        else if (slot != loc[t]) {
                            detail = "triple intersection depends on the witness at points (" +
                                     std::to_string(x) + "," + std::to_string(y) + "," +
                                     std::to_string(z) + ")";
                            return false;
                        }
                    }
                }
        return true;
    });

    runCheck("dual-idempotent-structure", [&](std::string& detail) {
        for (RelIndex g = 0; g <= d; ++g)
            for (RelIndex h = 0; h <= d; ++h)
                for (RelIndex i = 0; i <= d; ++i) {
                    const bool nonzero = !eaeMatrix(scheme, field, g, h, i, x0).isZero();
                    if (nonzero != (scheme.intersectionNumber(g, h, i) != 0)) {
                        detail = "E*AE* support differs from the intersection numbers at (" +
                                 std::to_string(g) + "," + std::to_string(h) + "," +
                                 std::to_string(i) + ")";
                        return false;
                    }
                }
        return true;
    });

    runCheck("dimension-closure", [&](std::string& detail) {
        alg.emplace(algebraClosure(field, subconstituentGenerators(scheme, field, x0)));
        long long nonzeroTriples = 0;
        for (RelIndex g = 0; g <= d; ++g)
            for (RelIndex h = 0; h <= d; ++h)
                for (RelIndex i = 0; i <= d; ++i)
                    if (scheme.intersectionNumber(g, h, i) != 0) ++nonzeroTriples;
        const long long formula = dimFormula(params);
        if (alg->dim() != formula || nonzeroTriples != formula ||
            static_cast<long long>(basis.size()) != formula) {
            detail = "dimensions disagree: closure " + std::to_string(alg->dim()) + ", formula " +
                     std::to_string(formula) + ", nonzero triples " + std::to_string(nonzeroTriples) +
                     ", basis " + std::to_string(basis.size());
            return false;
        }
        return true;
    });

    runCheck("b-basis-faithful", [&](std::string& detail) {
        basisMats.reserve(basis.size());
        RowSpace bs(field, static_cast<std::size_t>(nPts) * nPts);
        for (const BTriple& t : basis) {
            basisMats.push_back(bToMatrix(scheme, field, t, x0));
            if (!alg->span.contains(flatten(basisMats.back()))) {
                detail = "B" + describeTriple(t) + " escapes the closure span";
                return false;
            }
            if (bs.insert(flatten(basisMats.back())) < 0) {
                detail = "B" + describeTriple(t) + " is dependent on earlier elements";
                return false;
            }
        }
        if (bs.dim() != alg->dim()) {
            detail = "B images do not span the closure";
            return false;
        }
        for (const BTriple& t : basis) {
            const BTriple tt{t.i, t.h, t.g};
            if (!(basisMats[static_cast<std::size_t>(basisIndex[t])].transpose() ==
                  basisMats[static_cast<std::size_t>(basisIndex.at(tt))])) {
                detail = "transpose rule fails at B" + describeTriple(t);
                return false;
            }
        }
        return true;
    });

    runCheck("product-rule", [&](std::string& detail) {
        // pairs with mismatched inner index are zero on both sides by the
        // dual-idempotent orthogonality already verified
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (basis[a].i != basis[b].g) continue;
                const FMatrix lhs = basisMats[a].mul(basisMats[b]);
                const TElement prod = bMul(field, scheme, basis[a], basis[b]);
                bool ok;
                if (prod.isZero()) {
                    ok = lhs.isZero();
                } else {
                    const auto& [t, c] = *prod.coeffs().begin();
                    ok = lhs == basisMats[static_cast<std::size_t>(basisIndex.at(t))].scaled(c);
                }
                if (!ok) {
                    detail = "B" + describeTriple(basis[a]) + " * B" + describeTriple(basis[b]) +
                             " differs from the matrix product";
                    return false;
                }
            }
        return true;
    });

    runCheck("center", [&](std::string& detail) {
        const auto cbasis = centerBasis(field, scheme);
        if (static_cast<long long>(cbasis.size()) != report.dimZ) {
            detail = "central family has the wrong size";
            return false;
        }
        for (const auto& [a, C] : cbasis) {
            for (const BTriple& t : basis) {
                TElement bt;
                bt.add(field, t, field.one());
                if (!(tMul(field, scheme, C, bt) == tMul(field, scheme, bt, C))) {
                    detail = "C_" + std::to_string(a) + " does not commute with B" + describeTriple(t);
                    return false;
                }
            }
        }
        for (const auto& [a, Ca] : cbasis)
            for (const auto& [b, Cb] : cbasis) {
                const auto [coeff, target] = cMul(field, scheme, a, b);
                const TElement expected = centerElement(field, scheme, target).scaled(field, coeff);
                if (!(tMul(field, scheme, Ca, Cb) == expected)) {
                    detail = "C-product rule fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")";
                    return false;
                }
            }
        const int zd = centerDim(*alg);
        if (zd != report.dimZ) {
            detail = "oracle center dimension " + std::to_string(zd) + " != " +
                     std::to_string(report.dimZ);
            return false;
        }
        RowSpace cs(field, static_cast<std::size_t>(nPts) * nPts);
        for (const auto& [a, C] : cbasis) {
            const FMatrix cm = tToMatrix(scheme, field, C, x0);
            for (const FMatrix& g : alg->generators)
                if (!(cm.mul(g) == g.mul(cm))) {
                    detail = "matrix of C_" + std::to_string(a) + " is not central";
                    return false;
                }
            cs.insert(flatten(cm));
        }
        if (cs.dim() != report.dimZ) {
            detail = "central matrices do not span the oracle center";
            return false;
        }
        if (report.stronglyNormalCount * report.dimZ != report.closedSubsetCount) {
            detail = "subset-count ratio is not the reciprocal of the center dimension";
            return false;
        }
        return true;
    });

    runCheck("counting", [&](std::string& detail) {
        const auto closed = scheme.enumerateClosedSubsets();
        const auto normal = scheme.enumerateStronglyNormal();
        if (static_cast<long long>(closed.size()) != report.closedSubsetCount ||
            static_cast<long long>(normal.size()) != report.stronglyNormalCount) {
            detail = "enumeration counts disagree with the closed-form counts";
            return false;
        }
        for (const auto& cs : closed) {
            if (!cs.isClosed) {
                detail = "an enumerated subset is not closed";
                return false;
            }
            const auto prod = scheme.complexProduct(cs.thinResidue, cs.thinRadical);
            if (prod != cs.members) {
                detail = "a closed subset is not residue * radical";
                return false;
            }
            if (static_cast<long long>(cs.members.size()) !=
                static_cast<long long>(cs.thinResidue.size()) *
                    static_cast<long long>(cs.thinRadical.size())) {
                detail = "order factorization fails for a closed subset";
                return false;
            }
            std::vector<RelIndex> inter;
            std::set_intersection(cs.thinResidue.begin(), cs.thinResidue.end(),
                                  cs.thinRadical.begin(), cs.thinRadical.end(),
                                  std::back_inserter(inter));
            if (inter != std::vector<RelIndex>{0}) {
                detail = "residue and radical overlap beyond the identity";
                return false;
            }
        }
        for (const auto& cs : normal)
            if (!cs.isStronglyNormal) {
                detail = "an enumerated subset is not strongly normal";
                return false;
            }
        // every strongly normal subset appears among the closed ones
        for (const auto& cs : normal) {
            const bool found = std::any_of(closed.begin(), closed.end(), [&](const ClosedSubset& c) {
                return c.members == cs.members;
            });
            if (!found) {
                detail = "a strongly normal subset is missing from the closed enumeration";
                return false;
            }
        }
        if (d <= 15) {
            const auto naive = scheme.enumerateClosedSubsetsNaive();
            if (naive.size() != closed.size()) {
                detail = "naive subset scan found " + std::to_string(naive.size()) +
                         " closed subsets, parameterization found " + std::to_string(closed.size());
                return false;
            }
            for (std::size_t t = 0; t < naive.size(); ++t)
                if (naive[t] != closed[t].members) {
                    detail = "naive scan and parameterization disagree on a subset";
                    return false;
                }
            const auto residue = scheme.thinResidue(scheme.allRelations());
            long long naiveNormal = 0;
            for (const auto& members : naive)
                if (std::includes(members.begin(), members.end(), residue.begin(), residue.end()))
                    ++naiveNormal;
            if (naiveNormal != report.stronglyNormalCount) {
                detail = "naive strongly-normal count disagrees";
                return false;
            }
        }
        // Galois numbers against brute-force subgroup enumeration
        const long long expected[4] = {1, 2, 5, 16};
        for (int m = 0; m <= 3; ++m) {
            long long brute = 0;
            const int total = 1 << m;
            for (std::uint32_t pick = 0; pick < (1u << (total - 1)); ++pick) {
                // candidate subgroup: 0 plus the chosen nonzero vectors
                std::vector<int> members{0};
                for (int v = 1; v < total; ++v)
                    if (pick & (1u << (v - 1))) members.push_back(v);
                bool closedSet = true;
                for (const int a : members)
                    for (const int b : members)
                        if (std::find(members.begin(), members.end(), a ^ b) == members.end()) {
                            closedSet = false;
                            break;
                        }
                if (closedSet) ++brute;
            }
            if (brute != expected[m] || galoisNumberG2(m) != expected[m] ||
                static_cast<long long>(enumerateSubspacesGF2(m).size()) != expected[m]) {
                detail = "Galois number mismatch at m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    // radical data shared by the remaining checks
    const std::vector<BTriple> rad = radicalBasis(field, scheme);
    std::vector<FMatrix> radMats;

    runCheck("radical-certificate", [&](std::string& detail) {
        if (static_cast<long long>(rad.size()) != report.radicalDim) {
            detail = "radical list size disagrees with the report";
            return false;
        }
        if (report.semisimple != rad.empty()) {
            detail = "semisimplicity flag disagrees with the radical";
            return false;
        }
        RowSpace rs(field, static_cast<std::size_t>(nPts) * nPts);
        for (const BTriple& t : rad) {
            radMats.push_back(basisMats[static_cast<std::size_t>(basisIndex.at(t))]);
            if (rs.insert(flatten(radMats.back())) < 0) {
                detail = "radical matrices are dependent";
                return false;
            }
        }
        if (!isTwoSidedIdeal(radMats, *alg)) {
            detail = "radical span is not a two-sided ideal";
            return false;
        }
        const int nil = nilpotencyIndex(field, radMats, nPts);
        if (nil != report.radicalNilpotency) {
            detail = "oracle nilpotency " + std::to_string(nil) + " != formula " +
                     std::to_string(report.radicalNilpotency);
            return false;
        }
        return true;
    });

    runCheck("local-algebras", [&](std::string& detail) {
        bool allLocalSemisimple = true;
        for (RelIndex g = 0; g <= d; ++g) {
            const auto lb = localBasis(g, params);
            const auto lr = localRadical(field, scheme, g);
            allLocalSemisimple = allLocalSemisimple && lr.empty();
            if (lr.empty() != !field.divides(scheme.valency(g))) {
                detail = "local semisimplicity at g=" + std::to_string(g) +
                         " disagrees with p | k_g";
                return false;
            }
            std::vector<FMatrix> lrMats;
            for (const BTriple& t : lr)
                lrMats.push_back(basisMats[static_cast<std::size_t>(basisIndex.at(t))]);
            const int nil = nilpotencyIndex(field, lrMats, nPts);
            if (nil != localNilpotency(field, params, g)) {
                detail = "local nilpotency at g=" + std::to_string(g) + " is " +
                         std::to_string(nil) + ", formula says " +
                         std::to_string(localNilpotency(field, params, g));
                return false;
            }
            if (localQuotientDim(field, params, g) !=
                static_cast<long long>(lb.size() - lr.size())) {
                detail = "local quotient dimension mismatch at g=" + std::to_string(g);
                return false;
            }
            // local product rule B_{g,h,g} B_{g,i,g} = k_{h&i} B_{g,h|i,g}
            for (const BTriple& s : lb)
                for (const BTriple& t : lb) {
                    TElement expected;
                    expected.add(field, BTriple{g, s.h | t.h, g},
                                 field.fromInt(scheme.valency(s.h & t.h)));
                    if (!(bMul(field, scheme, s, t) == expected)) {
                        detail = "local product rule fails at g=" + std::to_string(g);
                        return false;
                    }
                }
        }
        if (report.semisimple != allLocalSemisimple) {
            detail = "global and local semisimplicity disagree";
            return false;
        }
        return true;
    });

    runCheck("d-elements", [&](std::string& detail) {
        for (RelIndex g = 0; g <= d; ++g) {
            std::vector<RelIndex> hs;
            forEachSubmask(tilde(g, params), [&](RelIndex h) {
                if (!field.divides(scheme.valency(h))) hs.push_back(h);
            });
            if (static_cast<long long>(hs.size()) != localQuotientDim(field, params, g)) {
                detail = "local idempotent count mismatch at g=" + std::to_string(g);
                return false;
            }
            std::map<RelIndex, TElement> ds;
            for (const RelIndex h : hs) ds[h] = dElement(field, scheme, BTriple{g, h, g});
            for (const RelIndex h : hs)
                for (const RelIndex i : hs) {
                    const TElement prod = tMul(field, scheme, ds[i], ds[h]);
                    const TElement expected = (h == i) ? ds[h] : TElement{};
                    if (!(prod == expected)) {
                        detail = "diagonal D products fail at g=" + std::to_string(g) + ", h=" +
                                 std::to_string(h) + ", i=" + std::to_string(i);
                        return false;
                    }
                    // one-sided action of the local basis
                    TElement bi;
                    bi.add(field, BTriple{g, i, g}, field.one());
                    const TElement act = tMul(field, scheme, bi, ds[h]);
                    const TElement want = le2(i, h)
                                              ? ds[h].scaled(field, field.fromInt(scheme.valency(i)))
                                              : TElement{};
                    if (!(act == want)) {
                        detail = "local action rule fails at g=" + std::to_string(g) + ", h=" +
                                 std::to_string(h) + ", i=" + std::to_string(i);
                        return false;
                    }
                }
        }
        return true;
    });

    runCheck("d-product-rules", [&](std::string& detail) {
        std::vector<BTriple> dset;
        for (const BTriple& t : basis)
            if (!field.divides(scheme.valency(t.h))) dset.push_back(t);
        std::map<BTriple, TElement> delems;
        for (const BTriple& t : dset) delems[t] = dElement(field, scheme, t);
        // B_{j,k,l} D_{g,h,i}: nonzero iff l == g and tilde(g&i)&k <= h, and
        // then equals k_{g&k} D_{j,m,i} with m = (i^j) | (tilde(i&j)&h)
        for (const BTriple& b : basis) {
            if (field.divides(scheme.valency(b.h))) continue;
            TElement be;
            be.add(field, b, field.one());
            for (const BTriple& t : dset) {
                const TElement lhs = tMul(field, scheme, be, delems[t]);
                TElement expected;
                if (b.i == t.g && le2(tilde(t.g & t.i, params) & b.h, t.h)) {
                    const RelIndex m = (t.i ^ b.g) | (tilde(t.i & b.g, params) & t.h);
                    expected = dElement(field, scheme, BTriple{b.g, m, t.i})
                                   .scaled(field, field.fromInt(scheme.valency(t.g & b.h)));
                }
                if (!(lhs == expected)) {
                    detail = "B*D rule fails at B" + describeTriple(b) + ", D" + describeTriple(t);
                    return false;
                }
            }
        }
        // D_{j,k,l} D_{g,h,i}: nonzero iff l == g, tilde(g&i)\h <= j, and
        // k = (g^j) | (tilde(g&j)&h); then equals D_{j,m,i}
        for (const BTriple& s : dset)
            for (const BTriple& t : dset) {
                const TElement lhs = tMul(field, scheme, delems[s], delems[t]);
                TElement expected;
                if (s.i == t.g && le2(tilde(t.g & t.i, params) & ~t.h, s.g) &&
                    s.h == ((t.g ^ s.g) | (tilde(t.g & s.g, params) & t.h))) {
                    const RelIndex m = (t.i ^ s.g) | (tilde(t.i & s.g, params) & t.h);
                    expected = dElement(field, scheme, BTriple{s.g, m, t.i});
                }
                if (!(lhs == expected)) {
                    detail = "D*D rule fails at D" + describeTriple(s) + ", D" + describeTriple(t);
                    return false;
                }
            }
        return true;
    });

    runCheck("matrix-units", [&](std::string& detail) {
        const auto classes = approxClasses(field, scheme);
        long long totalTriples = 0;
        for (const auto& cls : classes) {
            totalTriples += static_cast<long long>(cls.triples.size());
            if (cls.triples.size() != cls.diagIndices.size() * cls.diagIndices.size()) {
                detail = "class size is not the square of the diagonal count (signature " +
                         std::to_string(cls.signature) + ")";
                return false;
            }
        }
        if (totalTriples + report.radicalDim != report.dimT) {
            detail = "class sizes and radical do not fill the dimension";
            return false;
        }
        const auto dropRad = [&](const TElement& e) {
            return e.dropWhere(
                [&](const BTriple& t) { return field.divides(scheme.valency(t.h)); });
        };
        // the unit elements of each class, indexed by their (left, right) pair
        struct ClassUnits {
            std::vector<RelIndex> diag;
            std::map<std::pair<RelIndex, RelIndex>, TElement> unit;
        };
        std::vector<ClassUnits> units;
        for (const auto& cls : classes) {
            ClassUnits cu;
            cu.diag = cls.diagIndices;
            for (const BTriple& t : cls.triples) {
                const auto key = std::make_pair(t.g, t.i);
                if (cu.unit.count(key)) {
                    detail = "two class triples share the same outer pair";
                    return false;
                }
                cu.unit[key] = dElement(field, scheme, t);
            }
            for (const RelIndex h : cu.diag)
                for (const RelIndex j : cu.diag)
                    if (!cu.unit.count({h, j})) {
                        detail = "missing class triple for an outer pair";
                        return false;
                    }
            units.push_back(std::move(cu));
        }
        for (const auto& cu : units)
            for (const RelIndex h : cu.diag)
                for (const RelIndex i : cu.diag)
                    for (const RelIndex j : cu.diag)
                        for (const RelIndex k : cu.diag) {
                            const TElement prod = dropRad(tMul(field, scheme, cu.unit.at({h, i}),
                                                               cu.unit.at({j, k})));
                            const TElement expected =
                                (i == j) ? dropRad(cu.unit.at({h, k})) : TElement{};
                            if (!(prod == expected)) {
                                detail = "matrix-unit relation fails inside a class";
                                return false;
                            }
                        }
        for (std::size_t a = 0; a < units.size(); ++a)
            for (std::size_t b = 0; b < units.size(); ++b) {
                if (a == b) continue;
                for (const auto& [ka, ua] : units[a].unit)
                    for (const auto& [kb, ub] : units[b].unit)
                        if (!dropRad(tMul(field, scheme, ua, ub)).isZero()) {
                            detail = "units of different classes do not annihilate";
                            return false;
                        }
            }
        return true;
    });

    runCheck("wedderburn-consistency", [&](std::string& detail) {
        const auto classes = approxClasses(field, scheme);
        std::vector<long long> sizes;
        for (const auto& cls : classes)
            sizes.push_back(static_cast<long long>(cls.diagIndices.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        if (sizes != report.wedderburnBlocks) {
            detail = "block sizes disagree with the report";
            return false;
        }
        long long squares = 0;
        for (const long long s : sizes) squares += s * s;
        if (report.radicalDim + squares != report.dimT) {
            detail = "radical and blocks do not fill the dimension";
            return false;
        }
        if (report.irreducibleCount != static_cast<long long>(classes.size())) {
            detail = "irreducible count differs from the class count";
            return false;
        }
        if (report.semisimple && report.irreducibleCount != report.dimZ) {
            detail = "semisimple case: class count differs from the center dimension";
            return false;
        }
        return true;
    });

    runCheck("report-consistency", [&](std::string& detail) {
        if (reportJson(report) != reportJson(runReport(u, p))) {
            detail = "report JSON is not deterministic";
            return false;
        }
        if (report.dimZ != (1LL << params.n2)) {
            detail = "center dimension is not 2^n2";
            return false;
        }
        long long thin = 0;
        for (RelIndex g = 0; g <= d; ++g)
            if (scheme.valency(g) == 1) ++thin;
        if (thin != report.d1) {
            detail = "d1 does not count the valency-one relations";
            return false;
        }
        if ((1LL << (params.n - params.n2)) != report.d1) {
            detail = "n2 + log2(d1) != n";
            return false;
        }
        return true;
    });

    runCheck("base-point-independence", [&](std::string& detail) {
        if (nPts > 36) {
            detail = "skipped: exhaustive base-point sweep runs for |X| <= 36";
            return true;
        }
        // deterministic sample of product pairs for the per-point check
        std::vector<std::pair<std::size_t, std::size_t>> samplePairs;
        for (std::size_t a = 0; a < basis.size() && samplePairs.size() < 25; a += 3)
            for (std::size_t b = 0; b < basis.size() && samplePairs.size() < 25; b += 5)
                if (basis[a].i == basis[b].g) samplePairs.push_back({a, b});
        for (int x = 0; x < nPts; ++x) {
            const SpannedAlgebra algx =
                algebraClosure(field, subconstituentGenerators(scheme, field, x));
            if (algx.dim() != report.dimT) {
                detail = "closure dimension differs at base point " + std::to_string(x);
                return false;
            }
            if (centerDim(algx) != report.dimZ) {
                detail = "center dimension differs at base point " + std::to_string(x);
                return false;
            }
            std::vector<FMatrix> rm;
            RowSpace rs(field, static_cast<std::size_t>(nPts) * nPts);
            for (const BTriple& t : rad) {
                rm.push_back(bToMatrix(scheme, field, t, x));
                rs.insert(flatten(rm.back()));
            }
            if (rs.dim() != report.radicalDim) {
                detail = "radical rank differs at base point " + std::to_string(x);
                return false;
            }
            if (nilpotencyIndex(field, rm, nPts) != report.radicalNilpotency) {
                detail = "radical nilpotency differs at base point " + std::to_string(x);
                return false;
            }
            for (const auto& [a, b] : samplePairs) {
                const FMatrix lhs =
                    bToMatrix(scheme, field, basis[a], x).mul(bToMatrix(scheme, field, basis[b], x));
                const FMatrix rhs = tToMatrix(
                    scheme, field, bMul(field, scheme, basis[a], basis[b]), x);
                if (!(lhs == rhs)) {
                    detail = "product faithfulness differs at base point " + std::to_string(x);
                    return false;
                }
            }
        }
        return true;
    });

    return res;
}

}  // namespace terw
