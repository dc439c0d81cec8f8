#pragma once

#include <cstdint>
#include <string>

namespace terw {

/// An element of the coefficient field in canonical form.
///
/// For a prime field F_p the element is the residue num() in [0, p-1] with
/// den() == 1.  For characteristic zero it is the reduced fraction
/// num()/den() with den() >= 1.  All arithmetic goes through Field, which
/// knows the characteristic; intermediate products are computed in 128 bits
/// and any value that leaves the 64-bit range raises std::overflow_error
/// rather than wrapping.
class FieldElem {
public:
    FieldElem() : num_(0), den_(1) {}

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool isZero() const { return num_ == 0; }

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

private:
    friend class Field;
    FieldElem(long long n, long long d) : num_(n), den_(d) {}
    long long num_;
    long long den_;
};

/// The coefficient field: F_p for a prime p, or the rationals when p == 0.
/// Primality is checked at construction.  Only the prime subfield ever
/// appears; every structure constant is an image of an integer.
class Field {
public:
    explicit Field(long long p);

    long long p() const { return p_; }
    bool charZero() const { return p_ == 0; }

    FieldElem zero() const { return FieldElem(0, 1); }
    FieldElem one() const { return FieldElem(1, 1); }

    /// Canonical image of an integer.
    FieldElem fromInt(long long z) const;
    /// Image of num/den; den must not map to zero.
    FieldElem fromRatio(long long num, long long den) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    /// Multiplicative inverse; inv(0) throws std::domain_error.
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;

    /// The "p divides z" predicate: for p > 0 ordinary divisibility, for
    /// p == 0 true exactly when z == 0.
    bool divides(long long z) const;

    /// The "z = 1 (mod p)" predicate with the characteristic-zero reading
    /// "z == 1".
    bool congruentOne(long long z) const;

    /// Decimal residue for p > 0, "num/den" for p == 0.
    std::string str(const FieldElem& a) const;

private:
    long long p_;
};

}  // namespace terw
