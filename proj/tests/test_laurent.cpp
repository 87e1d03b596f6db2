#include <doctest.h>

#include "nullify/laurent.hpp"

using namespace nullify;

TEST_CASE("laurent arithmetic cancels and orders terms") {
    LaurentPoly1 a = LaurentPoly1::monomial(2, 1) + LaurentPoly1::monomial(-3, -4);
    LaurentPoly1 b = LaurentPoly1::monomial(-2, 1);
    CHECK((a + b).terms().size() == 1);
    CHECK((a + b).coeff(-4) == -3);
    CHECK((a - a).is_zero());
    CHECK(a.to_string() == "-3*t^(-4/2) + 2*t^(1/2)");
}

TEST_CASE("laurent text round trip") {
    LaurentPoly1 p = LaurentPoly1::parse("1*t^(2/2) + 1*t^(6/2) + -1*t^(8/2)");
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(8) == -1);
    CHECK(LaurentPoly1::parse(p.to_string()) == p);
    CHECK(LaurentPoly1::parse("0").is_zero());
    CHECK_THROWS(LaurentPoly1::parse("t^2"));
}

TEST_CASE("exact division recovers factors") {
    LaurentPoly1 z = LaurentPoly1::monomial(1, 1) + LaurentPoly1::monomial(-1, -1);
    LaurentPoly1 f = LaurentPoly1::monomial(3, 4) + LaurentPoly1::monomial(-1, -2) + LaurentPoly1::constant(7);
    CHECK((f * z.pow(3)).divided_exactly(z.pow(2)) == f * z);
    CHECK_THROWS(f.divided_exactly(z));
}

TEST_CASE("big coefficients stay exact") {
    LaurentPoly1 two = LaurentPoly1::constant(2);
    LaurentPoly1 p = two.pow(200);
    BigInt expect = 1;
    for (int i = 0; i < 200; ++i) expect *= 2;
    CHECK(p.coeff(0) == expect);
    CHECK(p.to_json()["0"].is_string());
}

TEST_CASE("two-variable products") {
    LaurentPoly2 f = LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(-1, 1, -1);
    LaurentPoly2 sq = f * f;
    CHECK(sq.terms().size() == 3);
    CHECK(sq.terms().at({0, -2}) == -2);
    CHECK((f - f).is_zero());
}
