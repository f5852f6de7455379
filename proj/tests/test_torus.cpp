#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "ncb/linalg.hpp"
#include "ncb/torus.hpp"

using namespace ncb;

TEST_CASE("clock and shift at q=2 are the Pauli pair") {
    FuzzyTorus t = fuzzy_torus(2, 1);
    CHECK(std::abs(t.zeta - cdouble(-1.0, 0.0)) < 1e-15);
    Mat sz = Mat::Zero(2, 2), sx = Mat::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    CHECK(spectral_norm(t.clock - sz) < 1e-15);
    CHECK(spectral_norm(t.shift - sx) < 1e-15);
}

TEST_CASE("commutation relation VU = zeta UV") {
    for (auto [q, p] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}, {6, 1}}) {
        FuzzyTorus t = fuzzy_torus(q, p);
        CHECK(spectral_norm(t.shift * t.clock - t.zeta * t.clock * t.shift) < 1e-12);
        Mat uq = Mat::Identity(q, q), vq = Mat::Identity(q, q);
        for (int i = 0; i < q; ++i) {
            uq = uq * t.clock;
            vq = vq * t.shift;
        }
        CHECK(spectral_norm(uq - Mat::Identity(q, q)) < 1e-12);
        CHECK(spectral_norm(vq - Mat::Identity(q, q)) < 1e-12);
    }
}

TEST_CASE("monomials span the full matrix algebra") {
    FuzzyTorus t = fuzzy_torus(4, 1);
    Mat cols(16, 16);
    int c = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) cols.col(c++) = flatten(t.monomial(a, b));
    CHECK(column_rank(cols, 1e-9) == 16);

    // U^a V^b really is clock^a · shift^b.
    Mat m = t.clock * t.clock * t.shift;
    CHECK(spectral_norm(t.monomial(2, 1).blocks[0] - m) < 1e-12);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(fuzzy_torus(4, 2), std::invalid_argument);   // not coprime
    CHECK_THROWS_AS(fuzzy_torus(1, 1), std::invalid_argument);   // q too small
    CHECK_THROWS_AS(torus_cover(4, 1, 3, 1), std::invalid_argument);  // 3 does not divide 4
}

TEST_CASE("torus covers: fixed algebra dimensions") {
    struct Case {
        int q, p, m, n, expected;
    };
    for (const Case& c : {Case{4, 1, 2, 1, 8}, Case{4, 1, 2, 2, 4}, Case{6, 1, 2, 3, 6},
                          Case{6, 5, 2, 3, 6}, Case{4, 3, 2, 2, 4}}) {
        TorusCoverScenario cov = torus_cover(c.q, c.p, c.m, c.n);
        CHECK(cov.base.dimension == c.expected);
        CHECK(check_action(cov.action, 1e-9).empty());

        // The conjugators implement the multiplier symmetries.
        cdouble zm = std::polar(1.0, 2.0 * M_PI / c.m);
        cdouble zn = std::polar(1.0, 2.0 * M_PI / c.n);
        Mat u = cov.total.clock, v = cov.total.shift;
        Mat wu = cov.conjugator_u, wv = cov.conjugator_v;
        CHECK(spectral_norm(wu * u * wu.adjoint() - zm * u) < 1e-12);
        CHECK(spectral_norm(wu * v * wu.adjoint() - v) < 1e-12);
        CHECK(spectral_norm(wv * v * wv.adjoint() - zn * v) < 1e-12);
        CHECK(spectral_norm(wv * u * wv.adjoint() - u) < 1e-12);

        // Fixed algebra = span of the monomials U^{mj} V^{nk}.
        for (int j = 0; j * c.m < c.q; ++j)
            for (int k = 0; k * c.n < c.q; ++k) {
                Vec x = flatten(cov.total.monomial(j * c.m, k * c.n));
                Vec proj = cov.base.basis_matrix * (cov.base.basis_matrix.adjoint() * x);
                CHECK((x - proj).norm() < 1e-9);
            }
    }
}

TEST_CASE("curvature is the coefficient commutator") {
    Mat e12 = Mat::Zero(2, 2), e21 = Mat::Zero(2, 2);
    e12(0, 1) = 1.0;
    e21(1, 0) = 1.0;
    ConnectionForm conn = make_connection(e12, e21);
    Mat f = curvature(conn);
    Mat expected = Mat::Zero(2, 2);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    CHECK(spectral_norm(f - expected) < 1e-15);

    // Commuting coefficients give a flat connection.
    ConnectionForm diag = make_connection(e12 + e21, 3.0 * (e12 + e21));
    CHECK(spectral_norm(curvature(diag)) < 1e-15);

    CHECK_THROWS_AS(make_connection(Mat::Zero(2, 2), Mat::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("the rank-4 rotation connection is flat") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int t = 0; t < 10; ++t) {
        ConnectionForm conn = paper_connection(coeff(rng), coeff(rng));
        CHECK(conn.rank == 4);
        CHECK(spectral_norm(curvature(conn)) < 1e-15);
    }
    // Structure: the u-coefficient rotates the (e₁,e₂) plane only.
    ConnectionForm c = paper_connection(1.0, 1.0);
    CHECK(std::abs(c.coeff_u(1, 0) - cdouble(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(c.coeff_u(0, 1) + cdouble(1.0, 0.0)) < 1e-15);
    CHECK(spectral_norm(c.coeff_u.block(2, 2, 2, 2)) == 0.0);
    CHECK(spectral_norm(c.coeff_v.block(0, 0, 2, 2)) == 0.0);
}

TEST_CASE("lifting preserves the coefficients") {
    TorusCoverScenario cov = torus_cover(4, 1, 2, 2);
    ConnectionForm conn = paper_connection(0.7, -1.3);
    ConnectionForm lifted = lift_connection(conn, cov);
    CHECK(lifted.rank == conn.rank);
    CHECK(spectral_norm(lifted.coeff_u - conn.coeff_u) == 0.0);
    CHECK(spectral_norm(lifted.coeff_v - conn.coeff_v) == 0.0);
}

TEST_CASE("descent through the trivial system reproduces the connection") {
    for (auto [q, m, n] : std::vector<std::array<int, 3>>{{4, 2, 1}, {4, 2, 2}, {6, 2, 3}}) {
        TorusCoverScenario cov = torus_cover(q, 1, m, n);
        ConnectionForm conn = paper_connection(0.4, 0.9);
        ConnectionForm lifted = lift_connection(conn, cov);
        DescentResult d = twisted_descent(cov, trivial_system(cov.action.group, conn.rank), lifted);
        CHECK(d.base_rank == conn.rank);
        CHECK(d.module_dimension == conn.rank * cov.base.dimension);
        CHECK(d.well_definedness_residual < 1e-9);
        REQUIRE(d.reproduction_residual.has_value());
        CHECK(*d.reproduction_residual < 1e-9);
        // Flat upstairs stays flat downstairs.
        CHECK(spectral_norm(d.descended_curvature) < 1e-9);
    }
}

TEST_CASE("descent through nontrivial characters stays flat") {
    TorusCoverScenario cov = torus_cover(4, 1, 2, 2);
    // A 4-dim system that commutes with the connection coefficients: one
    // character with multiplicity 2 on the (e₁,e₂) plane, another on (e₃,e₄).
    std::vector<Mat> rho(4);
    for (int g = 0; g < 4; ++g) {
        int a = g / 2, b = g % 2;
        Mat d = Mat::Zero(4, 4);
        d(0, 0) = d(1, 1) = (a == 1 ? -1.0 : 1.0);
        d(2, 2) = d(3, 3) = (b == 1 ? -1.0 : 1.0);
        rho[g] = d;
    }
    LocalSystem sys = make_local_system(cov.action.group, std::move(rho));
    ConnectionForm lifted = lift_connection(paper_connection(1.0, 1.0), cov);
    DescentResult d = twisted_descent(cov, sys, lifted);
    CHECK(d.module_dimension == 4 * cov.base.dimension);
    CHECK(d.base_rank == 4);
    CHECK(d.well_definedness_residual < 1e-9);
    CHECK(!d.reproduction_residual.has_value());
    CHECK(spectral_norm(d.descended_curvature) < 1e-9);
}

TEST_CASE("system dimension must match the lifted rank") {
    TorusCoverScenario cov = torus_cover(4, 1, 2, 1);
    ConnectionForm lifted = lift_connection(paper_connection(1.0, 1.0), cov);
    CHECK_THROWS_AS(twisted_descent(cov, trivial_system(cov.action.group, 2), lifted),
                    std::invalid_argument);
}
