#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncb/algebra.hpp"

using namespace ncb;

namespace {

std::mt19937 rng(12345);

AlgebraElement random_element(const AlgebraPtr& alg) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    AlgebraElement a = zero_element(alg);
    for (Mat& b : a.blocks)
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) b(r, c) = cdouble(gauss(rng), gauss(rng));
    return a;
}

}  // namespace

TEST_CASE("make_algebra basics") {
    auto c1 = make_algebra({1}, "C");
    CHECK(c1->dim() == 1);
    auto m2 = make_algebra({2}, "M2");
    CHECK(m2->dim() == 4);
    auto c3 = make_algebra({1, 1, 1}, "C3");
    CHECK(c3->dim() == 3);
    CHECK(c3->commutative());
    CHECK(!m2->commutative());
    CHECK_THROWS_AS(make_algebra({}, "empty"), std::invalid_argument);
    CHECK_THROWS_AS(make_algebra({2, 0}, "zero"), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
    auto m2 = make_algebra({2}, "M2");
    AlgebraElement one = identity_element(m2);
    CHECK(operator_norm(one * one - one) == doctest::Approx(0.0));

    auto c2 = diagonal_algebra(2);
    AlgebraElement e1 = diagonal_element(c2, {1.0, 0.0});
    AlgebraElement e2 = diagonal_element(c2, {0.0, 1.0});
    CHECK(operator_norm(e1 * e2) == doctest::Approx(0.0));

    // (ab)* = b*a* on random pairs
    for (int t = 0; t < 20; ++t) {
        AlgebraElement a = random_element(m2), b = random_element(m2);
        CHECK(operator_norm((a * b).adjoint() - b.adjoint() * a.adjoint()) < 1e-12);
    }
    // algebra mismatch
    CHECK_THROWS_AS(identity_element(m2) * identity_element(make_algebra({2}, "other")),
                    std::invalid_argument);
}

TEST_CASE("adjoint is an involution") {
    auto alg = make_algebra({2, 3}, "A");
    for (int t = 0; t < 10; ++t) {
        AlgebraElement a = random_element(alg);
        CHECK(operator_norm(a.adjoint().adjoint() - a) == 0.0);
    }
}

TEST_CASE("operator norm") {
    auto m2 = make_algebra({2}, "M2");
    CHECK(operator_norm(identity_element(m2)) == doctest::Approx(1.0));
    auto c2 = diagonal_algebra(2);
    CHECK(operator_norm(diagonal_element(c2, {3.0, cdouble(0, -4)})) == doctest::Approx(4.0));
}

TEST_CASE("C*-identity and submultiplicativity") {
    for (auto shape : std::vector<std::vector<int>>{{1}, {2}, {1, 1, 1}, {2, 3}, {3}}) {
        auto alg = make_algebra(shape, "A");
        for (int t = 0; t < 100; ++t) {
            AlgebraElement a = random_element(alg);
            double na = operator_norm(a);
            CHECK(na >= 0.0);
            CHECK(std::abs(operator_norm(a.adjoint() * a) - na * na) <= 1e-9 * na * na);
            AlgebraElement b = random_element(alg);
            CHECK(operator_norm(a * b) <= na * operator_norm(b) * (1 + 1e-9));
        }
    }
}

TEST_CASE("norm separates zero") {
    auto alg = make_algebra({2, 2}, "A");
    CHECK(operator_norm(zero_element(alg)) == 0.0);
    AlgebraElement a = random_element(alg);
    CHECK(operator_norm(a) > 0.0);
}

TEST_CASE("is_projection") {
    auto m2 = make_algebra({2}, "M2");
    CHECK(is_projection(identity_element(m2), 1e-9));
    auto c2 = diagonal_algebra(2);
    CHECK(is_projection(diagonal_element(c2, {1.0, 0.0}), 1e-9));
    CHECK(!is_projection(diagonal_element(c2, {0.5, 0.5}), 1e-9));
    CHECK_THROWS_AS(is_projection(identity_element(m2), 0.0), std::invalid_argument);
}

TEST_CASE("trace_vector") {
    auto alg = make_algebra({2, 3}, "A");
    auto tv = trace_vector(identity_element(alg));
    CHECK(tv[0].real() == doctest::Approx(2.0));
    CHECK(tv[1].real() == doctest::Approx(3.0));
    auto tz = trace_vector(zero_element(alg));
    CHECK(std::abs(tz[0]) == 0.0);
    CHECK(std::abs(tz[1]) == 0.0);

    // rank-1 projection in M2 has trace 1
    auto m2 = make_algebra({2}, "M2");
    AlgebraElement p = zero_element(m2);
    p.blocks[0](0, 0) = 1.0;
    CHECK(is_projection(p, 1e-12));
    CHECK(trace_vector(p)[0].real() == doctest::Approx(1.0));

    // tr(ab) = tr(ba) per block
    for (int t = 0; t < 20; ++t) {
        AlgebraElement a = random_element(alg), b = random_element(alg);
        auto t1 = trace_vector(a * b), t2 = trace_vector(b * a);
        for (size_t i = 0; i < t1.size(); ++i) CHECK(std::abs(t1[i] - t2[i]) < 1e-9);
    }
}

TEST_CASE("flatten round trip and multiplication matrices") {
    auto alg = make_algebra({2, 1}, "A");
    AlgebraElement a = random_element(alg), x = random_element(alg);
    CHECK(operator_norm(unflatten(alg, flatten(a)) - a) == 0.0);
    CHECK((left_mult_matrix(a) * flatten(x) - flatten(a * x)).norm() < 1e-12);
    CHECK((right_mult_matrix(a) * flatten(x) - flatten(x * a)).norm() < 1e-12);
}
