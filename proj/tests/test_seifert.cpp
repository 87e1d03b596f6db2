#include <doctest.h>

#include <random>

#include "nullify/fixtures.hpp"
#include "nullify/polynomials.hpp"
#include "nullify/seifert.hpp"

using namespace nullify;

namespace {
const char *kRightTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
}

TEST_CASE("signature by diagonalization") {
    CHECK(signature_diag(IntSymMatrix({{1, 0}, {0, 1}})) == 2);
    CHECK(signature_diag(IntSymMatrix({{2, 0}, {0, -3}})) == 0);
    CHECK(signature_diag(IntSymMatrix({{-2, 1}, {1, -2}})) == -2);
    CHECK(signature_diag(IntSymMatrix({{0, 1}, {1, 0}})) == 0);
    CHECK(signature_diag(IntSymMatrix()) == 0);
    CHECK(signature_diag(IntSymMatrix({{0, 0}, {0, 0}})) == 0);
    CHECK_THROWS_AS(IntSymMatrix({{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("signature by sigma series") {
    CHECK(signature_sigma_series(IntSymMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(signature_sigma_series(IntSymMatrix({{-2, 1}, {1, -2}})) == -2);
    CHECK(signature_sigma_series(IntSymMatrix({{0, 1}, {1, 0}})) == 0);
    CHECK(signature_sigma_series(IntSymMatrix({{0, 0}, {0, 1}})) == 1);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 8), val(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = dim(rng);
        IntMatrix a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i][j] = a[j][i] = val(rng);
        IntSymMatrix m(a);
        auto s = signature_sigma_series(m);
        REQUIRE(s.has_value());
        CHECK(*s == signature_diag(m));
    }
}

TEST_CASE("Seifert matrices of small diagrams") {
    CHECK(seifert_matrix(LinkDiagram::unlink(1)).matrix.empty());
    SeifertData t = seifert_matrix(parse_pd(kRightTrefoil));
    CHECK(t.matrix.size() == 2);
    CHECK(t.genus == 1);
    CHECK(signature_diag(IntSymMatrix::symmetrized(t.matrix)) == -2);
    CHECK(determinant(IntSymMatrix::symmetrized(t.matrix).rows()) == 3);
    LinkDiagram hopf = torus_diagram(2, 2);
    CHECK(seifert_matrix(hopf).matrix.size() == 1);
    CHECK(seifert_matrix(reverse_component(hopf, 1)).matrix.size() == 1);
    CHECK(std::abs(signature(hopf)) == 1);
    CHECK_THROWS_WITH_AS(seifert_matrix(disjoint_union(hopf, hopf)), doctest::Contains("split"), DiagramError);
    CHECK(signature(disjoint_union(hopf, hopf)) == 2 * signature(hopf));
}

TEST_CASE("braid reading reproduces the link") {
    for (const auto &r : default_fixtures()) {
        if (r.crossing_number > 8) continue;
        CAPTURE(r.name);
        LinkDiagram d = r.diagram();
        SeifertData sd = seifert_matrix(d);
        CHECK(sd.braid.strands == sd.seifert_circles);
        CHECK(static_cast<int>(sd.braid.letters.size()) == d.crossing_count() + 2 * sd.vogel_moves);
        CHECK(sd.betti == static_cast<int>(sd.braid.letters.size()) - sd.braid.strands + 1);
        CHECK(sd.diagram_betti == d.crossing_count() - sd.seifert_circles + 1);
        if (sd.vogel_moves == 0) CHECK(sd.betti == sd.diagram_betti);
        LinkDiagram closed = braid_closure(sd.braid.strands, sd.braid.letters);
        if (closed.crossing_count() <= 20) CHECK(jones(closed) == jones(d));
    }
}

TEST_CASE("Seifert matrix agrees with the Conway polynomial and tabulated signatures") {
    for (const auto &r : default_fixtures()) {
        if (r.crossing_number > 9) continue;
        CAPTURE(r.name);
        LinkDiagram d = r.diagram();
        SeifertData sd = seifert_matrix(d);
        CHECK(normalize_unit(alexander_from_seifert(sd.matrix)) == normalize_unit(alexander_from_conway(conway(homfly(d)))));
        const int sigma = signature(d);
        if (r.signature) CHECK(sigma == *r.signature);
        if (r.components == 1) CHECK(sigma % 2 == 0);
        CHECK(signature(mirror(d)) == -sigma);
    }
}

TEST_CASE("signature moves by at most one under a skein step") {
    for (const auto &r : default_fixtures()) {
        if (r.crossing_number > 7) continue;
        CAPTURE(r.name);
        LinkDiagram d = r.diagram();
        const int s = signature(d);
        for (int c = 0; c < d.crossing_count(); ++c) {
            const int s0 = signature(smooth(d, c));
            const int s1 = signature(switch_crossing(d, c));
            CHECK(std::abs(s - s0) <= 1);
            CHECK(std::abs(s1 - s0) <= 1);
        }
    }
}

TEST_CASE("genus from the diagram nullification number") {
    CHECK(genus_alternating(0, 1).twice == 0);
    CHECK(genus_alternating(6, 1).twice == 6);
    CHECK(genus_alternating(6, 1).valid);
    CHECK_FALSE(genus_alternating(3, 1).valid);
}
