#include <doctest.h>

#include "terw/indices.hpp"

using namespace terw;

namespace {

SchemeParams p23() { return SchemeParams::make({2, 3}); }
SchemeParams p33() { return SchemeParams::make({3, 3}); }

}  // namespace

TEST_CASE("scheme parameters derive the constants") {
    const auto p = p23();
    CHECK(p.n == 2);
    CHECK(p.d == 3);
    CHECK(p.n2 == 1);
    CHECK(p.d1 == 2);
    CHECK(p.tildeMask == 2);
    CHECK(p.pointCount == 6);
    CHECK(p.n2 + 1 == p.n);  // n2 + log2(d1) = n

    CHECK_THROWS_AS(SchemeParams::make({}), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::make({1}), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::make({2, 0}), std::invalid_argument);
}

TEST_CASE("support lists 1-based bit positions") {
    CHECK(support(0, 2).empty());
    CHECK(support(2, 2) == std::vector<int>{2});
    CHECK(support(3, 2) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(support(4, 2), std::invalid_argument);
}

TEST_CASE("le2 is the support order") {
    CHECK(le2(1, 3));
    CHECK_FALSE(le2(2, 1));
    for (RelIndex g = 0; g < 64; ++g) {
        CHECK(le2(g, g));
        for (RelIndex h = 0; h < 64; ++h) {
            if (le2(g, h) && le2(h, g)) CHECK(g == h);
            for (RelIndex i = 0; i < 64; ++i)
                if (le2(g, h) && le2(h, i)) CHECK(le2(g, i));
        }
    }
}

TEST_CASE("set operations act on supports") {
    CHECK(symdiff(2, 3) == 1);
    CHECK(join(2, 3) == 3);
    CHECK(meet(2, 3) == 2);
    const int n = 4;
    for (RelIndex g = 0; g < 16; ++g) {
        CHECK(symdiff(g, g) == 0);
        for (RelIndex h = 0; h < 16; ++h) {
            const auto sg = support(g, n), sh = support(h, n);
            const auto check = [&](RelIndex r, auto merge) {
                std::vector<int> want;
                for (int a = 1; a <= n; ++a) {
                    const bool ing = std::find(sg.begin(), sg.end(), a) != sg.end();
                    const bool inh = std::find(sh.begin(), sh.end(), a) != sh.end();
                    if (merge(ing, inh)) want.push_back(a);
                }
                CHECK(support(r, n) == want);
            };
            check(join(g, h), [](bool a, bool b) { return a || b; });
            check(meet(g, h), [](bool a, bool b) { return a && b; });
            check(diff(g, h), [](bool a, bool b) { return a && !b; });
            check(symdiff(g, h), [](bool a, bool b) { return a != b; });
        }
    }
}

TEST_CASE("tilde keeps the positions with large factors") {
    const auto p = p23();
    CHECK(tilde(3, p) == 2);
    CHECK(tilde(0, p) == 0);
    CHECK(tilde(3, p33()) == 3);
    for (RelIndex g = 0; g <= p.d; ++g) {
        CHECK(tilde(tilde(g, p), p) == tilde(g, p));
        CHECK(le2(tilde(g, p), g));
    }
}

TEST_CASE("odot window") {
    const auto p = p23();
    CHECK(odot(2, 3, p) == 3);
    CHECK(odot(3, 3, p) == 2);
    for (RelIndex g = 0; g <= p.d; ++g) CHECK(odot(g, 0, p) == g);

    const auto q = SchemeParams::make({2, 3, 4});
    for (RelIndex g = 0; g <= q.d; ++g)
        for (RelIndex h = 0; h <= q.d; ++h) {
            CHECK(le2(symdiff(g, h), odot(g, h, q)));
            CHECK(le2(odot(g, h, q), join(g, h)));
        }
}

TEST_CASE("five-argument composite index") {
    const auto p = p23();
    CHECK(m5(2, 3, 3, 2, 3, p) == 3);
    CHECK(m5(0, 0, 0, 0, 0, p) == 0);
    // by the defining formula: tilde(3&3)=2, (2 minus 3)=0, (1|2)&2&3=2
    CHECK(m5(3, 1, 3, 2, 3, p) == 2);

    const auto q = SchemeParams::make({2, 3, 4});
    for (RelIndex g = 0; g <= q.d; ++g)
        for (RelIndex h = 0; h <= q.d; ++h)
            for (RelIndex i = 0; i <= q.d; ++i)
                for (RelIndex j = 0; j <= q.d; ++j)
                    for (RelIndex k = 0; k <= q.d; ++k) {
                        const RelIndex m = m5(g, h, i, j, k, q);
                        CHECK(le2(symdiff(g, k), m));
                        CHECK(le2(m, odot(g, k, q)));
                    }
}

TEST_CASE("submask and interval iteration") {
    std::vector<RelIndex> seen;
    forEachSubmask(5, [&](RelIndex s) { seen.push_back(s); });
    CHECK(seen == std::vector<RelIndex>{0, 1, 4, 5});
    seen.clear();
    forEachInInterval(1, 5, [&](RelIndex s) { seen.push_back(s); });
    CHECK(seen == std::vector<RelIndex>{1, 5});
    CHECK_THROWS_AS(forEachInInterval(2, 1, [](RelIndex) {}), std::invalid_argument);
}
