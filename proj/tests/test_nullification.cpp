#include <doctest.h>

#include "nullify/fixtures.hpp"
#include "nullify/nullification.hpp"
#include "nullify/rational.hpp"
#include "nullify/seifert.hpp"

using namespace nullify;

namespace {

const FixtureRecord &fixture(const char *name) {
    const FixtureRecord *r = find_fixture(default_fixtures(), name);
    REQUIRE(r != nullptr);
    return *r;
}

bool same_jones_up_to_mirror(const LinkDiagram &a, const LinkDiagram &b) {
    const LaurentPoly1 j = jones(a);
    return j == jones(b) || j == jones(mirror(b));
}

} // namespace

TEST_CASE("n_D of small diagrams") {
    CHECK(n_diagram(LinkDiagram::unlink(1)).upper == 0);
    CHECK(n_diagram(LinkDiagram::unlink(3)).upper == 0);
    const NullResult t = n_diagram(fixture("3_1").diagram());
    CHECK(t.upper == 2);
    CHECK(t.lower == 2);
    CHECK(t.witness.size() == 2);
    CHECK(t.certification.back() == Triviality::ExactTrivial);
    NullOptions small;
    small.search_limit = 2;
    CHECK_THROWS_AS(n_diagram(fixture("3_1").diagram(), small), SearchLimitExceeded);
}

TEST_CASE("8_20 in a minimum and a non-minimum diagram") {
    const LinkDiagram m = curated_diagram("8_20_M");
    const LinkDiagram n = curated_diagram("8_20_N");
    const LinkDiagram table = fixture("8_20").diagram();
    CHECK(jones(m) == jones(table));
    CHECK(same_jones_up_to_mirror(n, table));
    CHECK(m.crossing_count() == 8);
    CHECK(n_diagram(m).upper == 1);
    CHECK(n_diagram(n).upper == 2);
}

TEST_CASE("11a_263 needs eight smoothings and its twist regions give the same bound") {
    const LinkDiagram d = fixture("11a_263").diagram();
    const NullResult r = n_diagram(d);
    CHECK(r.upper == 8);
    CHECK(replay_witness(d, r).empty());
    const TwistRegionReport tw = twist_region_bound(d);
    CHECK(tw.parallel_sizes == std::vector<int>{3, 3, 3, 2});
    CHECK(tw.antiparallel == 0);
    CHECK(tw.singles == 0);
    CHECK(tw.bound(0) == 7);
    CHECK(tw.bound(1) == 8);
}

TEST_CASE("alternating closed form") {
    CHECK(n_d_alternating(fixture("3_1").diagram()) == 2);
    CHECK(n_d_alternating(fourplat_diagram({1, 2, 3, 1, 3})) == 6);
    CHECK(n_d_alternating(braid_closure(2, {1})) == 0);
    CHECK(n_d_alternating(braid_closure(3, {1, -2})) == 0);
    CHECK_THROWS_AS(n_d_alternating(fixture("8_20").diagram()), std::invalid_argument);
}

TEST_CASE("closed form equals exhaustive search on alternating fixtures up to 7 crossings") {
    int checked = 0;
    for (const FixtureRecord &r : default_fixtures()) {
        if (r.crossing_number > 7) continue;
        const LinkDiagram d = r.diagram();
        if (!is_alternating(d) || !is_reduced(d)) continue;
        INFO(r.name);
        CHECK(n_diagram(d).upper == n_d_alternating(d));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("general intervals") {
    SUBCASE("trefoil") {
        const NullResult r = n_general_interval(fixture("3_1").diagram());
        CHECK(r.lower == 2);
        CHECK(r.upper == 2);
        CHECK(r.exact());
    }
    SUBCASE("the 4-plat (-3,-2,-1,2,3) is 10_22 and one smoothing nullifies it") {
        const LinkDiagram d = fourplat_diagram({-3, -2, -1, 2, 3});
        CHECK(same_jones_up_to_mirror(d, fixture("10_22").diagram()));
        const NullResult r = n_general_interval(d);
        CHECK(r.lower == 1);
        CHECK(r.upper == 1);
        CHECK(replay_witness(d, r).empty());
        CHECK(check_bounds(fixture("10_22"), r).ok);
    }
    SUBCASE("T(3,3) with one component reversed") {
        for (int k = 1; k <= 3; ++k) {
            const LinkDiagram d = reverse_component(torus_diagram(3, 3), k);
            const NullResult r = n_general_interval(d);
            CHECK(r.lower == 1);
            CHECK(r.upper == 1);
        }
    }
    SUBCASE("depth budget") {
        NullOptions opt;
        opt.depth = 1;
        opt.search_limit = 0;
        const NullResult r = n_general_interval(fixture("5_1").diagram(), opt);
        CHECK(r.upper_exceeded);
        CHECK(to_json(r)["upper"] == "> 1");
    }
}

TEST_CASE("general intervals on every fixture") {
    for (const FixtureRecord &rec : default_fixtures()) {
        const LinkDiagram d = rec.diagram();
        INFO(rec.name);
        const NullResult r = n_general_interval(d);
        REQUIRE_FALSE(r.upper_exceeded);
        CHECK(r.lower <= r.upper);
        CHECK(static_cast<int>(r.witness.size()) == r.upper);
        CHECK(replay_witness(d, r).empty());
        CHECK(r.upper <= n_diagram(d).upper);
        CHECK(check_bounds(rec, r).ok);
        int comps = d.component_count();
        for (const WitnessStep &s : r.witness) {
            if (s.r2_over < 0) CHECK(std::abs(s.components_after - comps) == 1);
            comps = s.components_after;
        }
    }
}

TEST_CASE("bounds check") {
    const FixtureRecord &t = fixture("3_1");
    const BoundsReport b = check_bounds(t, n_general_interval(t.diagram()));
    CHECK(b.ok);
    CHECK(b.lower == 2);
    CHECK(b.upper == 2);
    NullResult fake;
    fake.kind = NullKind::GeneralInterval;
    fake.lower = fake.upper = 1;
    CHECK_FALSE(check_bounds(t, fake).ok);
}

TEST_CASE("passages switch a crossing") {
    for (const char *name : {"3_1", "4_1", "8_20"}) {
        const LinkDiagram d = fixture(name).diagram();
        for (int c = 0; c < d.crossing_count(); ++c) {
            const auto p = find_passage(d, c);
            REQUIRE(p.has_value());
            CHECK(p->diagram.crossing_count() == d.crossing_count() + 2);
            CHECK(canonical_key(smooth(smooth(p->diagram, p->extra), c)) == canonical_key(switch_crossing(d, c)));
        }
    }
}

TEST_CASE("twist regions") {
    const TwistRegionReport t = twist_region_bound(fixture("3_1").diagram());
    CHECK(t.parallel_sizes == std::vector<int>{3});
    CHECK(t.bound(0) == 2);
    CHECK(t.bound(1) == 3);
    for (int k = 1; k <= 3; ++k) {
        const LinkDiagram clasp = fourplat_diagram({2 * k}, true);
        const TwistRegionReport a = twist_region_bound(clasp);
        CHECK(a.antiparallel == 1);
        CHECK(a.antiparallel_crossings == 2 * k);
        CHECK(a.parallel_sizes.empty());
        CHECK(n_diagram(clasp).upper == 1);
    }
    int alternating = 0, holds = 0;
    for (const FixtureRecord &r : default_fixtures()) {
        const LinkDiagram d = r.diagram();
        if (!is_alternating(d)) continue;
        const TwistRegionReport tw = twist_region_bound(d);
        int in_regions = tw.antiparallel_crossings + tw.singles;
        for (int p : tw.parallel_sizes) in_regions += p;
        CHECK(in_regions == d.crossing_count());
        ++alternating;
        if (n_diagram(d).upper <= tw.bound(1)) ++holds;
        else WARN_MESSAGE(false, r.name << " exceeds the twist region bound with c = 1");
    }
    CHECK(alternating > 0);
    MESSAGE("twist region bound with c = 1 holds on " << holds << " of " << alternating << " alternating fixtures");
}

TEST_CASE("nullification writhe") {
    const NullWrithe t = nullification_writhe(fixture("3_1").diagram());
    CHECK(t.crossings.size() == 2);
    CHECK(t.writhe == 2);
    CHECK(t.holds());
    const LinkDiagram d = fourplat_diagram({1, 2, 3, 1, 3});
    const NullWrithe w = nullification_writhe(d);
    CHECK(w.writhe == 0);
    int pos = 0;
    for (int c : w.crossings) pos += d.crossing(c).sign > 0;
    CHECK(pos == 3);
    CHECK(w.crossings.size() == 6);
    CHECK(nullification_writhe(LinkDiagram::unlink(1)).writhe == 0);
    CHECK_THROWS_AS(nullification_writhe(fixture("8_20").diagram()), std::invalid_argument);
    for (const FixtureRecord &r : default_fixtures()) {
        const LinkDiagram dd = r.diagram();
        if (!is_alternating(dd) || !is_reduced(dd)) continue;
        INFO(r.name);
        CHECK(nullification_writhe(dd).holds());
    }
}

TEST_CASE("restricted upper bound and json") {
    const NullResult r = n_restricted_upper({curated_diagram("8_20_N"), curated_diagram("8_20_M")});
    CHECK(r.kind == NullKind::MinimumDiagram);
    CHECK(r.upper == 1);
    const nlohmann::json j = to_json(r);
    CHECK(j["kind"] == "minimum_diagram");
    CHECK(j["witness"].size() == 1);
    CHECK(j["certification"].back() == "exact_trivial");
}
