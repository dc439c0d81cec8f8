#include "terw/field.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace terw {

namespace {

bool isPrime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error("exact rational arithmetic overflow");
    return static_cast<long long>(v);
}

long long mulChecked(long long a, long long b) {
    return checked(static_cast<__int128>(a) * b);
}

long long addChecked(long long a, long long b) {
    return checked(static_cast<__int128>(a) + b);
}

long long mod(long long z, long long p) {
    long long r = z % p;
    return r < 0 ? r + p : r;
}

}  // namespace

Field::Field(long long p) : p_(p) {
    if (p < 0 || (p > 0 && !isPrime(p)))
        throw std::invalid_argument("characteristic must be 0 or a prime");
}

FieldElem Field::fromInt(long long z) const {
    if (p_ == 0) return FieldElem(z, 1);
    return FieldElem(mod(z, p_), 1);
}

FieldElem Field::fromRatio(long long num, long long den) const {
    return div(fromInt(num), fromInt(den));
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    if (p_ > 0) return FieldElem(mod(a.num_ + b.num_, p_), 1);
    const long long num =
        addChecked(mulChecked(a.num_, b.den_), mulChecked(b.num_, a.den_));
    const long long den = mulChecked(a.den_, b.den_);
    if (num == 0) return FieldElem();
    const long long g = std::gcd(num < 0 ? -num : num, den);
    return FieldElem(num / g, den / g);
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    return add(a, neg(b));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    if (p_ > 0) return FieldElem(mod(mulChecked(a.num_, b.num_), p_), 1);
    if (a.num_ == 0 || b.num_ == 0) return FieldElem();
    // cross-reduce first to keep intermediates small
    const long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    const long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return FieldElem(mulChecked(a.num_ / g1, b.num_ / g2),
                     mulChecked(a.den_ / g2, b.den_ / g1));
}

FieldElem Field::neg(const FieldElem& a) const {
    if (p_ > 0) return a.num_ == 0 ? a : FieldElem(p_ - a.num_, 1);
    return FieldElem(checked(-static_cast<__int128>(a.num_)), a.den_);
}

FieldElem Field::inv(const FieldElem& a) const {
    if (a.isZero()) throw std::domain_error("division by zero in the coefficient field");
    if (p_ == 0) {
        return a.num_ < 0 ? FieldElem(-a.den_, -a.num_) : FieldElem(a.den_, a.num_);
    }
    // extended Euclid on (a.num_, p_)
    long long t = 0, newT = 1, r = p_, newR = a.num_;
    while (newR != 0) {
        const long long q = r / newR;
        t = std::exchange(newT, t - q * newT);
        r = std::exchange(newR, r - q * newR);
    }
    return FieldElem(mod(t, p_), 1);
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

bool Field::divides(long long z) const {
    if (z < 0) throw std::invalid_argument("divides expects a nonnegative integer");
    if (p_ == 0) return z == 0;
    return z % p_ == 0;
}

bool Field::congruentOne(long long z) const {
    if (p_ == 0) return z == 1;
    return mod(z - 1, p_) == 0;
}

std::string Field::str(const FieldElem& a) const {
    if (p_ > 0) return std::to_string(a.num_);
    return std::to_string(a.num_) + "/" + std::to_string(a.den_);
}

}  // namespace terw
