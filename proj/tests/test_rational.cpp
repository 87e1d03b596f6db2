#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "nullify/fixtures.hpp"
#include "nullify/polynomials.hpp"
#include "nullify/rational.hpp"
#include "nullify/seifert.hpp"

using namespace nullify;

TEST_CASE("continued fractions") {
    CHECK(cf_to_fraction({3}) == Fraction{3, 1});
    CHECK(cf_to_fraction({1, 2, 3}) == Fraction{10, 3});
    CHECK(cf_to_fraction({3, 1, -3}) == Fraction{-9, 4});
    CHECK(cf_to_fraction({2, 0}) == Fraction{1, 2});
    CHECK_THROWS_AS(cf_to_fraction({}), std::invalid_argument);
    CHECK_THROWS_AS(cf_to_fraction({1, 0, 2}), std::invalid_argument);
    CHECK(cf_to_fraction({0}) == Fraction{0, 1});
    CHECK_THROWS_AS(cf_to_fraction({1, -1, -1}), std::invalid_argument);
    CHECK(cf_outer_first({1, 2, 3}) == Fraction{10, 7});
    CHECK(fourplat_equals(cf_outer_first({2, 3}), cf_to_fraction({2, 3})) == false);
    CHECK(fourplat_equals_up_to_mirror(cf_outer_first({2, 3}), cf_to_fraction({2, 3})));
}

TEST_CASE("doubling a vector with a middle unit gives p^2/(eps+pq)") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(1, 4), entry(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        TangleVector v(static_cast<std::size_t>(len(rng)));
        for (int &a : v) a = entry(rng);
        const Fraction f = cf_outer_first(v);
        for (int eps : {1, -1}) {
            if (f.p == 1) continue;
            TangleVector w = v;
            w.push_back(eps);
            for (auto it = v.rbegin(); it != v.rend(); ++it) w.push_back(-*it);
            const Fraction g = cf_outer_first(w);
            CHECK(fourplat_equals_up_to_mirror(g, make_fraction(f.p * f.p, eps + f.p * f.q)));
            CHECK(std::llabs(g.p) == f.p * f.p);
        }
    }
}

TEST_CASE("canonical vectors") {
    CHECK(fraction_to_canonical_vector({3, 1}) == TangleVector{3});
    CHECK(fraction_to_canonical_vector({10, 3}) == TangleVector{1, 2, 3});
    CHECK(fraction_to_canonical_vector({1, 1}) == TangleVector{1});
    for (long long p = 2; p <= 30; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const TangleVector v = fraction_to_canonical_vector({p, q});
            CHECK(v.size() % 2 == 1);
            for (int a : v) CHECK(a > 0);
            CHECK(fourplat_equals(cf_to_fraction(v), Fraction{p, q}));
            CHECK(fraction_to_canonical_vector(cf_to_fraction(v)) == v);
        }
}

TEST_CASE("even expansions") {
    const TangleVector t = even_expansion({3, 1});
    CHECK(t.size() == 2);
    for (long long p = 1; p <= 41; p += 2)
        for (long long q = 1; q < std::max(p, 2LL); ++q) {
            if (std::gcd(p, q) != 1) continue;
            const TangleVector v = even_expansion({p, q});
            CHECK(v.size() % 2 == 0);
            for (int a : v) CHECK(a % 2 == 0);
            if (!v.empty()) {
                const Fraction g = cf_to_fraction(v);
                CHECK(std::llabs(g.p) == p);
                CHECK(fourplat_equals(g, Fraction{p, q}));
            }
        }
    CHECK_THROWS_AS(even_expansion({10, 3}), std::invalid_argument);
}

TEST_CASE("4-plat equivalence") {
    CHECK(fourplat_equals({10, 3}, {10, 7}));
    CHECK(fourplat_equals({9, 4}, {9, 7}));
    CHECK(fourplat_equals({9, 4}, {9, 4}));
    CHECK_FALSE(fourplat_equals({9, 4}, {9, 2}));
    CHECK(fourplat_equals_up_to_mirror({9, 4}, {9, 2}));
    CHECK_FALSE(fourplat_equals({9, 4}, {7, 4}));
    // equivalence relation on a range
    for (long long p = 3; p <= 15; p += 2)
        for (long long a = 1; a < p; ++a)
            for (long long b = 1; b < p; ++b) {
                if (std::gcd(p, a) != 1 || std::gcd(p, b) != 1) continue;
                CHECK(fourplat_equals({p, a}, {p, b}) == fourplat_equals({p, b}, {p, a}));
                if (fourplat_equals({p, a}, {p, b})) {
                    CHECK(jones(fourplat_diagram(fraction_to_canonical_vector({p, a}))) ==
                          jones(fourplat_diagram(fraction_to_canonical_vector({p, b}))));
                }
            }
}

TEST_CASE("4-plat diagrams") {
    LinkDiagram t = fourplat_diagram({3});
    CHECK(t.crossing_count() == 3);
    CHECK(t.component_count() == 1);
    CHECK(is_alternating(t));
    CHECK(fourplat_diagram({2}).component_count() == 2);
    LinkDiagram k = fourplat_diagram({1, 2, 3, 1, 3});
    CHECK(k.crossing_count() == 10);
    CHECK(is_alternating(k));
    CHECK(jones(k) == *find_fixture(default_fixtures(), "10_22")->jones);
    CHECK(jones(fourplat_diagram({2, 2})) == *find_fixture(default_fixtures(), "4_1")->jones);
    CHECK(jones(mirror(fourplat_diagram({3}))) == *find_fixture(default_fixtures(), "3_1")->jones);
    CHECK_THROWS_AS(fourplat_diagram({}), std::invalid_argument);
}

TEST_CASE("4-plat signature and crossing number formulas") {
    CHECK(fourplat_signature({1, 1}) == 0);
    CHECK(std::abs(fourplat_signature({3, 1})) == 2);
    CHECK(fourplat_signature({3, 1}) == signature(fourplat_diagram({3})));
    CHECK(fourplat_crossing_number({2, -2}) == 3);
    CHECK(fourplat_crossing_number({2, -2, 2, -2}) == 5);
    CHECK_THROWS_AS(fourplat_crossing_number({2}), std::invalid_argument);
    CHECK_THROWS_AS(fourplat_crossing_number({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(fourplat_signature({10, 3}), std::invalid_argument);
    for (const TangleVector &v : std::vector<TangleVector>{{2, -2}, {4, -2}, {2, -4, 2, -2}, {-2, 2}}) {
        const Fraction f = cf_to_fraction(v);
        CHECK(std::abs(fourplat_signature(f)) == static_cast<int>(v.size()));
        const TangleVector c = fraction_to_canonical_vector(f);
        CHECK(fourplat_crossing_number(v) == std::accumulate(c.begin(), c.end(), 0));
    }
}

TEST_CASE("parallel and anti-parallel boxes") {
    const BoxClassification t = classify_parallel_antiparallel({3});
    CHECK(t.parallel == std::vector<int>{1});
    CHECK(classify_parallel_antiparallel({2}).parallel.size() + classify_parallel_antiparallel({2}, true).parallel.size() == 1);
    CHECK(fourplat_nd({3}) == 2);
    CHECK(fourplat_nd({1, 2, 3, 1, 3}) == 6);
    CHECK(fourplat_nd({2}) == 1);
    CHECK(fourplat_nd({2}, true) == 1);
    std::function<void(TangleVector, int)> walk = [&](TangleVector v, int rem) {
        if (!v.empty()) {
            for (bool rs : {false, true}) {
                LinkDiagram d = fourplat_diagram(v, rs);
                CHECK(is_alternating(d));
                CHECK(fourplat_nd(v, rs) == d.crossing_count() - seifert_circles(d).circle_count + 1);
            }
        }
        for (int a = 1; a <= rem; ++a) {
            TangleVector w = v;
            w.push_back(a);
            walk(w, rem - a);
        }
    };
    walk({}, 8);
}
