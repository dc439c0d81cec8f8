#include <doctest.h>

#include <random>
#include <stdexcept>

#include "terw/field.hpp"

using namespace terw;

TEST_CASE("field construction validates the characteristic") {
    CHECK_NOTHROW(Field(0));
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(97));
    CHECK_THROWS_AS(Field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    CHECK_THROWS_AS(Field(-3), std::invalid_argument);
}

TEST_CASE("integer images") {
    CHECK(Field(2).fromInt(2).isZero());
    CHECK(Field(3).fromInt(-1) == Field(3).fromInt(2));
    const Field q(0);
    CHECK(q.fromInt(2).num() == 2);
    CHECK(q.fromInt(2).den() == 1);
}

TEST_CASE("inverses and products") {
    const Field f3(3);
    CHECK(f3.inv(f3.fromInt(2)) == f3.fromInt(2));
    const Field f5(5);
    CHECK(f5.mul(f5.fromInt(2), f5.fromInt(3)) == f5.one());
    CHECK_THROWS_AS(f5.inv(f5.zero()), std::domain_error);
    CHECK_THROWS_AS(Field(0).inv(Field(0).zero()), std::domain_error);

    const Field q(0);
    const FieldElem half = q.fromRatio(1, 2);
    CHECK(q.mul(half, q.fromInt(2)) == q.one());
    CHECK(q.fromRatio(3, -2).num() == -3);
    CHECK(q.fromRatio(3, -2).den() == 2);
}

TEST_CASE("divisibility and congruence predicates") {
    CHECK(Field(2).divides(2));
    CHECK_FALSE(Field(3).divides(2));
    CHECK_FALSE(Field(0).divides(2));
    CHECK(Field(0).divides(0));
    CHECK(Field(2).congruentOne(3));
    CHECK_FALSE(Field(2).congruentOne(2));
    CHECK(Field(0).congruentOne(1));
    CHECK_FALSE(Field(0).congruentOne(3));
    CHECK_THROWS_AS(Field(2).divides(-1), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(Field(3).str(Field(3).fromInt(-1)) == "2");
    CHECK(Field(0).str(Field(0).fromRatio(4, 6)) == "2/3");
    CHECK(Field(0).str(Field(0).fromInt(2)) == "2/1");
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> dist(-40, 40);
    for (const long long p : {0LL, 2LL, 3LL, 5LL, 7LL}) {
        const Field f(p);
        const auto randomElem = [&]() {
            if (p == 0) {
                long long den = 0;
                while (den == 0) den = dist(rng);
                return f.fromRatio(dist(rng), den);
            }
            return f.fromInt(dist(rng));
        };
        for (int iter = 0; iter < 300; ++iter) {
            const FieldElem a = randomElem(), b = randomElem(), c = randomElem();
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)).isZero());
            if (!a.isZero()) CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.zero()) == a);
        }
        // the integer image is a ring homomorphism
        for (int iter = 0; iter < 200; ++iter) {
            const long long x = dist(rng), y = dist(rng);
            CHECK(f.fromInt(x + y) == f.add(f.fromInt(x), f.fromInt(y)));
            CHECK(f.fromInt(x * y) == f.mul(f.fromInt(x), f.fromInt(y)));
        }
    }
}

TEST_CASE("rational overflow is trapped") {
    const Field q(0);
    const FieldElem big = q.fromInt(1LL << 62);
    CHECK_THROWS_AS(q.mul(big, big), std::overflow_error);
}
