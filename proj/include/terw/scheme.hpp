#pragma once

#include <string>
#include <vector>

#include "terw/indices.hpp"

namespace terw {

/// Raised by brute-force operations when the point set exceeds the
/// configured cap.  The CLI maps it to its resource-cap exit code.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed subset of the relation set, together with its invariants.
struct ClosedSubset {
    std::vector<RelIndex> members;      ///< sorted, always contains 0
    bool isClosed = false;              ///< verified against the definition
    bool isStronglyNormal = false;      ///< contains the thin residue of the scheme
    std::vector<RelIndex> thinRadical;  ///< valency-1 members
    std::vector<RelIndex> thinResidue;  ///< least strongly normal closed subset inside
    RelIndex pMax = 0;                  ///< support of the largest tilde-fixed member
};

inline constexpr long long kDefaultMaxPoints = 4096;

/// The factorial scheme on the product of the parameter factors.  Points
/// are mixed-radix encoded, coordinate 1 least significant.  Brute-force
/// operations (those that scan points) refuse to run past maxPoints.
class FactorialScheme {
public:
    explicit FactorialScheme(SchemeParams params, long long maxPoints = kDefaultMaxPoints);

    const SchemeParams& params() const { return params_; }
    long long pointCount() const { return params_.pointCount; }
    long long maxPoints() const { return maxPoints_; }
    void setMaxPoints(long long cap) { maxPoints_ = cap; }
    /// Throws ResourceCapError unless pointCount() <= maxPoints().
    void requireDeskScale(const char* what) const;

    std::vector<int> coords(long long point) const;
    long long index(const std::vector<int>& coords) const;
    std::string renderPoint(long long point) const;            // "0,2"
    long long parsePoint(const std::string& text) const;

    /// Relation index of a pair of points: the bitmask of coordinates
    /// where they differ.
    RelIndex rel(long long x, long long y) const;

    /// k_g = prod over the support of g of (u_a - 1).
    long long valency(RelIndex g) const;

    /// Closed-form intersection number p_{gh}^i.
    long long intersectionNumber(RelIndex g, RelIndex h, RelIndex i) const;

    /// Brute-force p_{gh}^i from a representative pair in R_i.
    long long intersectionNumberOracle(RelIndex g, RelIndex h, RelIndex i) const;

    /// |xR_g  .  yR_h  .  zR_i| by a point scan.
    long long tripleIntersection(long long x, long long y, long long z,
                                 RelIndex g, RelIndex h, RelIndex i) const;

    /// Complex multiplication of relation sets.
    std::vector<RelIndex> complexProduct(const std::vector<RelIndex>& U,
                                         const std::vector<RelIndex>& V) const;

    /// Least closed subset containing U (fixed point of complex products).
    ClosedSubset generatedClosedSubset(const std::vector<RelIndex>& U) const;

    bool isClosed(const std::vector<RelIndex>& members) const;

    /// Valency-1 members of a closed subset.
    std::vector<RelIndex> thinRadical(const std::vector<RelIndex>& members) const;
    /// Closure of the union of the squares R_g R_g over the members.
    std::vector<RelIndex> thinResidue(const std::vector<RelIndex>& members) const;

    std::vector<ClosedSubset> enumerateClosedSubsets() const;
    std::vector<ClosedSubset> enumerateStronglyNormal() const;

    /// Exhaustive scan of all relation subsets; only for d <= 15.
    std::vector<std::vector<RelIndex>> enumerateClosedSubsetsNaive() const;

    /// The full relation list 0..d.
    std::vector<RelIndex> allRelations() const;

private:
    std::vector<RelIndex> closureMembers(const std::vector<RelIndex>& U) const;
    ClosedSubset describe(std::vector<RelIndex> members) const;
    /// Subgroups of the thin radical, realized as sorted index lists.
    std::vector<std::vector<RelIndex>> thinRadicalSubgroups() const;

    SchemeParams params_;
    long long maxPoints_;
};

/// Number of subspaces of an m-dimensional vector space over the 2-element
/// field (sum of Gaussian binomials).
long long galoisNumberG2(int m);

/// Gaussian binomial coefficient [m choose k] at q = 2.
long long gaussianBinomial2(int m, int k);

/// All subspaces of F_2^m as sorted member lists (each member a bitmask),
/// enumerated through reduced row-echelon generator matrices, so the list
/// is duplicate-free by construction.
std::vector<std::vector<RelIndex>> enumerateSubspacesGF2(int m);

}  // namespace terw
