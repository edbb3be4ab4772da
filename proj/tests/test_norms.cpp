#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "magraph/norms.hpp"

using namespace magraph;

namespace {

Eigen::VectorXd random_vector(std::mt19937& rng, int max_dim = 8) {
    std::uniform_int_distribution<int> dim_dist(1, max_dim);
    std::uniform_real_distribution<double> val_dist(-10.0, 10.0);
    Eigen::VectorXd v(dim_dist(rng));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = val_dist(rng);
    return v;
}

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("known values on (3, -4)") {
    Eigen::VectorXd v(2);
    v << 3.0, -4.0;
    CHECK(norm_l1(v) == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(norm_l2(v) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(norm_linf(v) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("general p-norm example") {
    Eigen::VectorXd v(3);
    v << 1.0, 2.0, 2.0;
    CHECK(norm_lp(v, 3.0) == doctest::Approx(std::cbrt(17.0)).epsilon(1e-14));
}

TEST_CASE("p-norm reduces to the one- and two-norm") {
    std::mt19937 rng(7001);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd v = random_vector(rng);
        CHECK(std::abs(norm_lp(v, 1.0) - norm_l1(v)) <= 1e-12);
        CHECK(std::abs(norm_lp(v, 2.0) - norm_l2(v)) <= 1e-12);
    }
}

TEST_CASE("weighted norm with unit weights reduces to the two-norm") {
    std::mt19937 rng(7002);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd v = random_vector(rng);
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(v.size());
        CHECK(std::abs(norm_weighted(v, ones) - norm_l2(v)) <= 1e-12);
    }
}

TEST_CASE("positivity: nonzero vectors have positive norm, zero has zero") {
    std::mt19937 rng(7003);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd v = random_vector(rng);
        if (v.cwiseAbs().maxCoeff() > 0.0) {
            CHECK(norm_l1(v) > 0.0);
            CHECK(norm_l2(v) > 0.0);
            CHECK(norm_linf(v) > 0.0);
        }
    }
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(5);
    CHECK(norm_l1(zero) == 0.0);
    CHECK(norm_l2(zero) == 0.0);
    CHECK(norm_linf(zero) == 0.0);
    CHECK(norm_lp(zero, 3.5) == 0.0);
}

TEST_CASE("absolute homogeneity") {
    std::mt19937 rng(7004);
    std::uniform_real_distribution<double> scale_dist(-5.0, 5.0);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd v = random_vector(rng);
        double c = scale_dist(rng);
        Eigen::VectorXd cv = c * v;
        double tol = 1e-9 * (1.0 + norm_l1(v));
        CHECK(std::abs(norm_l1(cv) - std::abs(c) * norm_l1(v)) <= tol);
        CHECK(std::abs(norm_l2(cv) - std::abs(c) * norm_l2(v)) <= tol);
        CHECK(std::abs(norm_linf(cv) - std::abs(c) * norm_linf(v)) <= tol);
    }
}

TEST_CASE("triangle inequality") {
    std::mt19937 rng(7005);
    std::uniform_real_distribution<double> val_dist(-10.0, 10.0);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd u = random_vector(rng);
        Eigen::VectorXd v(u.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = val_dist(rng);
        Eigen::VectorXd sum = u + v;
        CHECK(norm_l1(sum) <= norm_l1(u) + norm_l1(v) + 1e-12);
        CHECK(norm_l2(sum) <= norm_l2(u) + norm_l2(v) + 1e-12);
        CHECK(norm_linf(sum) <= norm_linf(u) + norm_linf(v) + 1e-12);
        CHECK(norm_lp(sum, 3.0) <= norm_lp(u, 3.0) + norm_lp(v, 3.0) + 1e-12);
    }
}

TEST_CASE("norm ordering: max-norm <= two-norm <= one-norm") {
    std::mt19937 rng(7006);
    for (int it = 0; it < 1000; ++it) {
        Eigen::VectorXd v = random_vector(rng);
        CHECK(norm_linf(v) <= norm_l2(v) + 1e-12);
        CHECK(norm_l2(v) <= norm_l1(v) + 1e-12);
    }
}

TEST_CASE("empty vectors are rejected") {
    Eigen::VectorXd empty(0);
    CHECK_THROWS_AS(norm_l1(empty), DimensionError);
    CHECK_THROWS_AS(norm_l2(empty), DimensionError);
    CHECK_THROWS_AS(norm_linf(empty), DimensionError);
    CHECK_THROWS_AS(norm_lp(empty, 2.0), DimensionError);
}

TEST_CASE("p below one is rejected") {
    Eigen::VectorXd v(2);
    v << 1.0, 1.0;
    CHECK_THROWS_AS(norm_lp(v, 0.5), ParameterError);
    CHECK_THROWS_AS(norm_lp(v, 0.0), ParameterError);
    CHECK_THROWS_AS(norm_lp(v, -1.0), ParameterError);
}

TEST_CASE("weighted norm validates dimensions and weight signs") {
    Eigen::VectorXd v(3);
    v << 1.0, 2.0, 3.0;
    Eigen::VectorXd short_w(2);
    short_w << 1.0, 1.0;
    CHECK_THROWS_AS(norm_weighted(v, short_w), DimensionError);
    Eigen::VectorXd neg_w(3);
    neg_w << 1.0, -0.5, 1.0;
    CHECK_THROWS_AS(norm_weighted(v, neg_w), ParameterError);
}

TEST_CASE("weighted norm known value") {
    // sqrt(2*1^2 + 0.5*4^2) = sqrt(2 + 8) = sqrt(10)
    Eigen::VectorXd a(2), d(2);
    a << 1.0, 4.0;
    d << 2.0, 0.5;
    CHECK(norm_weighted(a, d) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));
}

}  // TEST_SUITE
