#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "ncb/action.hpp"
#include "ncb/errors.hpp"

using namespace ncb;

namespace {

std::mt19937 rng(777);

AlgebraElement random_element(const AlgebraPtr& alg) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement a = zero_element(alg);
    for (Mat& b : a.blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) b(r, c) = cdouble(gauss(rng), gauss(rng));
    return a;
}

GroupAction swap_action_c2() {
    FiniteGroup z2 = make_cyclic_group(2);
    return permutation_action(z2, diagonal_algebra(2), {{0, 1}, {1, 0}});
}

}  // namespace

TEST_CASE("cyclic groups") {
    FiniteGroup t = make_cyclic_group(1);
    CHECK(t.order == 1);
    FiniteGroup z2 = make_cyclic_group(2);
    CHECK(z2.table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    FiniteGroup z6 = make_cyclic_group(6);
    CHECK(element_order(z6, 1) == 6);
    CHECK_THROWS_AS(make_cyclic_group(0), std::invalid_argument);
}

TEST_CASE("product groups") {
    FiniteGroup t = product_group(make_cyclic_group(1), make_cyclic_group(1));
    CHECK(t.order == 1);

    FiniteGroup klein = product_group(make_cyclic_group(2), make_cyclic_group(2));
    for (int g = 1; g < 4; ++g) CHECK(element_order(klein, g) == 2);

    FiniteGroup z6 = product_group(make_cyclic_group(2), make_cyclic_group(3));
    std::vector<int> orders;
    for (int g = 0; g < 6; ++g) orders.push_back(element_order(z6, g));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 3, 3, 6, 6});

    CHECK_THROWS_AS(product_group(make_cyclic_group(10), make_cyclic_group(10)),
                    std::invalid_argument);
}

TEST_CASE("check_action accepts valid actions") {
    CHECK(check_action(trivial_action(make_cyclic_group(4), make_algebra({2}, "M2")), 1e-9)
              .empty());
    CHECK(check_action(swap_action_c2(), 1e-9).empty());
}

TEST_CASE("check_action flags a corrupted action") {
    // Order-2 element acting by a 3-cycle: composition alpha_g alpha_g != alpha_e.
    FiniteGroup z2 = make_cyclic_group(2);
    GroupAction bad = permutation_action(z2, diagonal_algebra(3), {{0, 1, 2}, {1, 2, 0}});
    auto report = check_action(bad, 1e-9);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& v : report)
        if (v.law == "composition" && v.g == 1 && v.h == 1) found = true;
    CHECK(found);
}

TEST_CASE("conditional expectation") {
    // Trivial group: identity map.
    GroupAction triv = trivial_action(make_cyclic_group(1), make_algebra({2}, "M2"));
    AlgebraElement a = random_element(triv.algebra);
    CHECK(operator_norm(conditional_expectation(triv, a) - a) < 1e-12);

    GroupAction sw = swap_action_c2();
    CHECK(operator_norm(conditional_expectation(sw, identity_element(sw.algebra)) -
                        identity_element(sw.algebra)) < 1e-12);
    AlgebraElement e10 = diagonal_element(sw.algebra, {1.0, 0.0});
    AlgebraElement expect = diagonal_element(sw.algebra, {0.5, 0.5});
    CHECK(operator_norm(conditional_expectation(sw, e10) - expect) < 1e-12);

    // E is idempotent and its output is G-invariant.
    for (int t = 0; t < 20; ++t) {
        AlgebraElement x = random_element(sw.algebra);
        AlgebraElement ex = conditional_expectation(sw, x);
        CHECK(operator_norm(conditional_expectation(sw, ex) - ex) < 1e-9);
        CHECK(operator_norm(sw.apply(1, ex) - ex) < 1e-9);
    }
}

TEST_CASE("conditional expectation is positive") {
    FiniteGroup z2 = make_cyclic_group(2);
    auto m2 = make_algebra({2}, "M2");
    Mat flip(2, 2);
    flip << 1, 0, 0, -1;
    GroupAction conj = conjugation_action(z2, m2, {{Mat::Identity(2, 2)}, {flip}});
    for (int t = 0; t < 20; ++t) {
        AlgebraElement b = random_element(m2);
        AlgebraElement e = conditional_expectation(conj, b.adjoint() * b);
        Eigen::SelfAdjointEigenSolver<Mat> es(e.blocks[0]);
        CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    }
}

TEST_CASE("fixed subalgebra") {
    GroupAction sw = swap_action_c2();
    FixedSubalgebra fs = fixed_subalgebra(sw);
    CHECK(fs.dimension == 1);
    // Basis spans (1,1).
    Vec v = flatten(fs.basis[0]);
    CHECK(std::abs(v(0) - v(1)) < 1e-9);

    // Free cyclic shift on C^k: only constants survive.
    for (int k : {2, 3, 5}) {
        GroupAction shift = free_translation_action(make_cyclic_group(k), 1);
        CHECK(fixed_subalgebra(shift).dimension == 1);
    }

    // Z2 on M2 by conjugation with diag(1,-1): diagonal matrices.
    FiniteGroup z2 = make_cyclic_group(2);
    auto m2 = make_algebra({2}, "M2");
    Mat flip(2, 2);
    flip << 1, 0, 0, -1;
    GroupAction conj = conjugation_action(z2, m2, {{Mat::Identity(2, 2)}, {flip}});
    FixedSubalgebra diag = fixed_subalgebra(conj);
    CHECK(diag.dimension == 2);
    for (const auto& b : diag.basis) {
        CHECK(std::abs(b.blocks[0](0, 1)) < 1e-9);
        CHECK(std::abs(b.blocks[0](1, 0)) < 1e-9);
    }

    // Basis multiplies back into its own span.
    for (const auto& b1 : diag.basis)
        for (const auto& b2 : diag.basis) {
            Vec p = flatten(b1 * b2);
            Vec residual = p - diag.basis_matrix * (diag.basis_matrix.adjoint() * p);
            CHECK(residual.norm() < 1e-9);
        }
}

TEST_CASE("is_free_on_spectrum") {
    CHECK(is_free_on_spectrum(swap_action_c2()));
    FiniteGroup z2 = make_cyclic_group(2);
    CHECK(!is_free_on_spectrum(trivial_action(z2, diagonal_algebra(2))));
    // Fixing one coordinate breaks freeness.
    GroupAction partial = permutation_action(z2, diagonal_algebra(3), {{0, 1, 2}, {1, 0, 2}});
    CHECK(!is_free_on_spectrum(partial));
    CHECK_THROWS_AS(is_free_on_spectrum(trivial_action(z2, make_algebra({2}, "M2"))),
                    UnsupportedAlgebraError);
}

TEST_CASE("free actions satisfy the dimension law") {
    for (int k : {2, 3, 4, 6})
        for (int copies : {1, 2, 3}) {
            GroupAction act = free_translation_action(make_cyclic_group(k), copies);
            REQUIRE(is_free_on_spectrum(act));
            CHECK(fixed_subalgebra(act).dimension * k == act.algebra->dim());
        }
}

TEST_CASE("wedderburn decomposition of fixed subalgebras") {
    // Z2 swap on C^2: base is C, one block of size 1.
    WedderburnData wd = wedderburn_decomposition(fixed_subalgebra(swap_action_c2()));
    CHECK(wd.block_sizes == std::vector<int>{1});
    CHECK(is_projection(wd.central_projections[0], 1e-9));

    // Trivial action on M2: base is M2 itself, one block of size 2.
    FiniteGroup t = make_cyclic_group(1);
    WedderburnData wm2 = wedderburn_decomposition(fixed_subalgebra(trivial_action(t, make_algebra({2}, "M2"))));
    CHECK(wm2.block_sizes == std::vector<int>{2});

    // Diagonal subalgebra of M2 (conjugation fixed points): two blocks of size 1.
    FiniteGroup z2 = make_cyclic_group(2);
    auto m2 = make_algebra({2}, "M2");
    Mat flip(2, 2);
    flip << 1, 0, 0, -1;
    GroupAction conj = conjugation_action(z2, m2, {{Mat::Identity(2, 2)}, {flip}});
    WedderburnData wdiag = wedderburn_decomposition(fixed_subalgebra(conj));
    CHECK(wdiag.block_sizes == std::vector<int>{1, 1});
    AlgebraElement sum = wdiag.central_projections[0] + wdiag.central_projections[1];
    CHECK(operator_norm(sum - identity_element(m2)) < 1e-7);
}
