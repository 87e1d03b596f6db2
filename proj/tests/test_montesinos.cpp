#include <doctest.h>

#include <numeric>
#include <random>

#include "nullify/fixtures.hpp"
#include "nullify/montesinos.hpp"
#include "nullify/polynomials.hpp"

using namespace nullify;

namespace {

MontesinosParams random_params(std::mt19937 &rng) {
    const int t = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Fraction> fs;
    for (int i = 0; i < t; ++i) {
        const long long a = std::uniform_int_distribution<int>(2, 9)(rng);
        long long b;
        do b = std::uniform_int_distribution<int>(1, static_cast<int>(a) - 1)(rng);
        while (std::gcd(a, b) != 1);
        fs.push_back({rng() % 2 ? -b : b, a});
    }
    MontesinosParams m = montesinos_from_fractions(fs, std::uniform_int_distribution<int>(-3, 3)(rng));
    for (int k = 0; k < 5; ++k) m.flip.push_back(rng() % 2 == 1);
    return m;
}

} // namespace

TEST_CASE("tangle vectors from fractions") {
    CHECK(tangle_vector({1, 2}) == TangleVector{2, 0});
    CHECK(tangle_vector({-2, 5}) == TangleVector{-2, -2, 0});
    CHECK(cf_to_fraction(tangle_vector({3, 7})) == Fraction{3, 7});
    CHECK(cf_to_fraction(tangle_vector({-4, 9})) == Fraction{-4, 9});
    CHECK_THROWS_WITH_AS(tangle_vector({5, 3}), doctest::Contains("fold its integer part into e"), std::invalid_argument);
    CHECK_THROWS_AS(tangle_vector({0, 1}), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(montesinos_diagram(MontesinosParams{}), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_diagram(MontesinosParams{{{2, 1}}, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_diagram(MontesinosParams{{{2, -1, 0}}, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_diagram(MontesinosParams{{{1, 0}}, 0, {}}), std::invalid_argument);
}

TEST_CASE("json parameters") {
    const MontesinosParams a = montesinos_from_json(nlohmann::json::parse(R"({"tangles":[[2,0],[3,1,0]],"e":-1})"));
    CHECK(a.tangles.size() == 2);
    CHECK(a.e == -1);
    const MontesinosParams b = montesinos_from_json(nlohmann::json::parse(R"({"fractions":[[1,2],[-1,3]],"e":2})"));
    CHECK(b.tangles == std::vector<TangleVector>{{2, 0}, {-3, 0}});
    CHECK(montesinos_from_json(montesinos_to_json(b)).tangles == b.tangles);
    CHECK_THROWS_AS(montesinos_from_json(nlohmann::json::parse(R"({"fractions":[[3,2]]})")), std::invalid_argument);
    CHECK_THROWS_AS(montesinos_from_json(nlohmann::json::parse(R"({"e":1})")), std::invalid_argument);
}

TEST_CASE("one tangle is the 4-plat") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 5)(rng);
        TangleVector v(static_cast<std::size_t>(n));
        for (int &a : v) a = std::uniform_int_distribution<int>(1, 3)(rng);
        MontesinosParams m;
        m.tangles = {TangleVector(v.begin(), v.end() - 1)};
        m.tangles[0].push_back(0);
        m.e = v.back();
        if (m.tangles[0].size() == 2 && m.tangles[0][0] == 1) continue;
        for (bool flip : {false, true}) {
            m.flip = {false, flip};
            const MontesinosDiagram d = build_montesinos(m);
            CHECK(canonical_key(d.built.diagram) == canonical_key(fourplat_diagram(v, flip)));
            if (is_alternating(d.built.diagram)) CHECK(montesinos_nd_bound(d, m) == fourplat_nd(v, flip));
        }
    }
}

TEST_CASE("trefoil as a Montesinos diagram") {
    MontesinosParams m{{{1, 1, 0}}, 1, {}};
    const LinkDiagram d = montesinos_diagram(m);
    CHECK(d.crossing_count() == 3);
    CHECK(montesinos_seifert_count(m) == 2);
    CHECK(seifert_circles(d).circle_count == 2);
}

TEST_CASE("K(1/2, 1/2, 0) is the (2,2) pretzel link") {
    const MontesinosParams base = montesinos_from_fractions({{1, 2}, {1, 2}}, 0);
    const auto &fx = default_fixtures();
    std::vector<LaurentPoly1> known;
    for (const char *name : {"L4a1{0}", "L4a1{1}"}) {
        const FixtureRecord *r = find_fixture(fx, name);
        REQUIRE(r != nullptr);
        known.push_back(jones(r->diagram()));
        known.push_back(jones(mirror(r->diagram())));
    }
    for (bool flip : {false, true}) {
        MontesinosParams m = base;
        m.flip = {false, flip};
        const LinkDiagram d = montesinos_diagram(m);
        CHECK(d.crossing_count() == 4);
        CHECK(d.component_count() == 2);
        CHECK(std::find(known.begin(), known.end(), jones(d)) != known.end());
    }
}

TEST_CASE("Seifert circle formula against direct counts") {
    std::mt19937 rng(20240601);
    int type1 = 0, type2 = 0, c2 = 0, mixed = 0, alternating = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const MontesinosParams m = random_params(rng);
        const MontesinosDiagram d = build_montesinos(m);
        const int s = seifert_circles(d.built.diagram).circle_count;
        INFO(montesinos_to_json(m).dump());
        REQUIRE_NOTHROW(montesinos_type(d));
        CHECK(montesinos_seifert_count(d, m) == s);
        (montesinos_type(d) == MontesinosType::I ? type1 : type2)++;
        if (montesinos_c(d, m) == 2) ++c2;
        if (m.e == 0 && montesinos_type(d) == MontesinosType::II && montesinos_c(d, m) == 0) ++mixed;
        for (std::size_t i = 0; i < m.tangles.size(); ++i)
            CHECK(neighbour_rule_holds(d.classes[i], m.tangles[i].size() - 1));
        if (is_alternating(d.built.diagram)) {
            ++alternating;
            CHECK(montesinos_nd_bound(d, m) == d.built.diagram.crossing_count() - s + 1);
        }
    }
    CHECK(type1 > 0);
    CHECK(type2 > 0);
    CHECK(c2 > 0);
    CHECK(mixed > 0);
    CHECK(alternating > 0);
}

TEST_CASE("every junction has the same type") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const MontesinosDiagram d = build_montesinos(random_params(rng));
        const std::vector<bool> par = junction_parallel(d);
        for (bool p : par) CHECK(p == par[0]);
    }
}

TEST_CASE("e = 0 with every tangle ending anti-parallel uses c = 2") {
    std::mt19937 rng(7);
    int seen = 0;
    for (int trial = 0; trial < 400 && seen < 10; ++trial) {
        MontesinosParams m = random_params(rng);
        m.e = 0;
        const MontesinosDiagram d = build_montesinos(m);
        if (montesinos_type(d) != MontesinosType::II || montesinos_c(d, m) != 2) continue;
        ++seen;
        CHECK(montesinos_seifert_count(d, m) == seifert_circles(d.built.diagram).circle_count);
    }
    CHECK(seen == 10);
}
