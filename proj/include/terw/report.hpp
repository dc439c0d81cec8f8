#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "terw/scheme.hpp"

namespace terw {

/// The JSON-serializable summary of every computed invariant for one
/// (parameters, characteristic) instance.  All values come from the
/// closed-form modules; the oracle is only consulted by runVerify.
struct Report {
    int n = 0;
    std::vector<int> u;
    long long p = 0;
    long long d = 0;
    int n2 = 0;
    long long d1 = 1;
    std::vector<long long> valencies;
    long long dimT = 0;
    long long dimZ = 0;
    long long closedSubsetCount = 0;
    long long stronglyNormalCount = 0;
    bool semisimple = true;
    long long radicalDim = 0;
    int radicalNilpotency = 1;
    std::vector<long long> wedderburnBlocks;
    long long irreducibleCount = 0;
    std::string centerProbabilityCheck;  ///< strongly normal / closed as "num/den"
    std::string basePoint;               ///< rendered coordinates, e.g. "0,0"
};

Report runReport(const std::vector<int>& u, long long p,
                 const std::optional<std::string>& basePoint = std::nullopt);

/// Deterministic JSON rendering; identical inputs give identical bytes.
std::string reportJson(const Report& r);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    bool overall = true;
};

/// Runs the oracle suite: scheme axioms, intersection-number equivalence,
/// basis faithfulness, center equality, radical certificate, Wedderburn
/// consistency, and subset counting.  Stops at the first failing check and
/// puts the first counterexample's data in its detail string.
VerifyResult runVerify(const std::vector<int>& u, long long p,
                       long long maxPoints = kDefaultMaxPoints,
                       std::ostream* progress = nullptr);

std::string verifyJson(const std::vector<int>& u, long long p, const VerifyResult& r);

}  // namespace terw
