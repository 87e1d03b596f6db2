#include <doctest.h>

#include "nullify/diagram.hpp"
#include "nullify/fixtures.hpp"
#include "nullify/polynomials.hpp"

using namespace nullify;

TEST_CASE("unlink values") {
    CHECK(jones(LinkDiagram::unlink(1)) == LaurentPoly1::constant(1));
    CHECK(jones(LinkDiagram::unlink(3)) == unlink_jones(3));
    CHECK(homfly(LinkDiagram::unlink(2)) == unlink_homfly(2));
    CHECK(jones_from_homfly(unlink_homfly(3)) == unlink_jones(3));
    CHECK(jones(parse_gauss("O1+ U1+")) == LaurentPoly1::constant(1));
}

TEST_CASE("trefoil orientation convention matches the table") {
    // all-positive crossings: t + t^3 - t^4
    LinkDiagram t = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    CHECK(t.writhe() == 3);
    CHECK(jones(t) == LaurentPoly1::parse("1*t^(2/2) + 1*t^(6/2) + -1*t^(8/2)"));
    CHECK(jones(mirror(t)) == jones(t).inverted());
}

TEST_CASE("fixture Jones polynomials") {
    int checked = 0;
    for (const auto &r : default_fixtures()) {
        if (!r.jones) continue;
        CAPTURE(r.name);
        LinkDiagram d = r.diagram();
        CHECK(jones(d) == *r.jones);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("HOMFLY specialises to Jones and Conway gives a unit Alexander value") {
    for (const auto &r : default_fixtures()) {
        if (r.crossing_number > 9) continue;
        CAPTURE(r.name);
        LinkDiagram d = r.diagram();
        LaurentPoly2 p = homfly(d);
        CHECK(jones_from_homfly(p) == jones(d));
        LaurentPoly1 delta = alexander_from_conway(conway(p));
        if (r.components == 1) {
            // Alexander polynomial at t = 1 is 1 for knots
            BigInt s = 0;
            for (const auto &[e, c] : delta.terms()) s += c;
            CHECK(s == 1);
        }
        CHECK(homfly(mirror(d)) != LaurentPoly2() );
    }
}

TEST_CASE("triviality classification") {
    CHECK(is_trivial_link(LinkDiagram::unlink(2)) == Triviality::ExactTrivial);
    CHECK(is_trivial_link(parse_gauss("O1+ U1+ U2- O2-")) == Triviality::ExactTrivial);
    CHECK(is_trivial_link(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")) == Triviality::Nontrivial);
    CHECK(is_trivial_link(torus_diagram(2, 2)) == Triviality::Nontrivial);
    CHECK(std::string(to_string(Triviality::PolyTrivial)) == "poly_trivial");
}

TEST_CASE("bracket budget") {
    PolyOptions opt;
    opt.max_bracket_crossings = 2;
    CHECK_THROWS_AS(jones(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"), opt), BudgetExceeded);
}
