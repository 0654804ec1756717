#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "coorbital/small_linalg.hpp"

using namespace coorbital::linalg;

namespace {

Matrix make(int r, int c, std::initializer_list<double> vals) {
    Matrix m(r, c);
    int k = 0;
    for (double v : vals) m.data[k++] = v;
    return m;
}

double col_norm_after(const Matrix& a, const Matrix& v, int j) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i) {
        double acc = 0.0;
        for (int k = 0; k < a.cols; ++k) acc += a.at(i, k) * v.at(k, j);
        s += acc * acc;
    }
    return std::sqrt(s);
}

} // namespace

TEST_CASE("svd of a diagonal matrix") {
    const auto s = svd(make(2, 2, {3.0, 0.0, 0.0, 1.0}));
    REQUIRE(s.sigma.size() == 2);
    CHECK(std::fabs(s.sigma[0] - 3.0) < 1e-14);
    CHECK(std::fabs(s.sigma[1] - 1.0) < 1e-14);
}

TEST_CASE("svd of a rank-one matrix") {
    // [[1,2],[2,4]] = (1,2)^T (1,2); singular values 5 and 0.
    const auto s = svd(make(2, 2, {1.0, 2.0, 2.0, 4.0}));
    CHECK(std::fabs(s.sigma[0] - 5.0) < 1e-14);
    CHECK(std::fabs(s.sigma[1]) < 1e-14);
    // Null direction is +-(2,-1)/sqrt(5), stored as the last column of v.
    const double inv = 1.0 / std::sqrt(5.0);
    const double sign = s.v.at(0, 1) > 0 ? 1.0 : -1.0;
    CHECK(std::fabs(s.v.at(0, 1) - sign * 2.0 * inv) < 1e-14);
    CHECK(std::fabs(s.v.at(1, 1) - sign * (-1.0) * inv) < 1e-14);
}

TEST_CASE("svd properties on random matrices") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5); // 2..6
        Matrix a(n, n);
        for (double& v : a.data) v = dist(rng);
        const auto s = svd(a);
        // Descending order and ||A v_j|| = sigma_j.
        for (int j = 0; j < n; ++j) {
            if (j > 0) CHECK(s.sigma[j] <= s.sigma[j - 1] + 1e-13);
            CHECK(std::fabs(col_norm_after(a, s.v, j) - s.sigma[j]) <
                  1e-11 * std::max(1.0, s.sigma[0]));
        }
        // V orthonormal.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double dot = 0.0;
                for (int k = 0; k < n; ++k) dot += s.v.at(k, i) * s.v.at(k, j);
                CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("nullspace dimensions") {
    CHECK(nullspace(make(2, 2, {1.0, 2.0, 2.0, 4.0})).dimension == 1);
    CHECK(nullspace(make(2, 2, {1.0, 0.0, 0.0, 1.0})).dimension == 0);
    CHECK(nullspace(make(2, 2, {0.0, 0.0, 0.0, 0.0})).dimension == 2);

    // Rank 1 in 3x3: two orthonormal null vectors, both annihilated.
    const auto a = make(3, 3, {1.0, 1.0, 1.0, 2.0, 2.0, 2.0, -1.0, -1.0, -1.0});
    const auto ns = nullspace(a);
    REQUIRE(ns.dimension == 2);
    for (const auto& v : ns.basis) {
        for (int i = 0; i < 3; ++i) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a.at(i, k) * v[k];
            CHECK(std::fabs(acc) < 1e-13);
        }
    }
}

TEST_CASE("gaussian solve") {
    const auto a = make(3, 3, {2.0, 1.0, -1.0, -3.0, -1.0, 2.0, -2.0, 1.0, 2.0});
    std::vector<double> x;
    REQUIRE(solve(a, {8.0, -11.0, -3.0}, x));
    CHECK(std::fabs(x[0] - 2.0) < 1e-13);
    CHECK(std::fabs(x[1] - 3.0) < 1e-13);
    CHECK(std::fabs(x[2] - (-1.0)) < 1e-13);

    std::vector<double> y;
    CHECK_FALSE(solve(make(2, 2, {1.0, 2.0, 2.0, 4.0}), {1.0, 1.0}, y));
}

TEST_CASE("positive vector search") {
    const double inv2 = 1.0 / std::sqrt(2.0);
    // Dimension 1, all-negative basis vector: negation is positive.
    auto r1 = find_positive_vector({{-inv2, -inv2}}, 1e-8);
    CHECK(r1.found);
    CHECK(r1.min_component > 0.5);

    // Dimension 1, mixed signs: no positive multiple exists.
    auto r2 = find_positive_vector({{inv2, -inv2}}, 1e-8);
    CHECK_FALSE(r2.found);

    // Dimension 2 spanning the equal-mass structure: (1,1,1,1)/2 is in the
    // span and positive.
    auto r3 = find_positive_vector(
        {{-0.5, 0.5, -0.5, 0.5}, {0.5, 0.5, 0.5, 0.5}}, 1e-8);
    CHECK(r3.found);
    CHECK(r3.min_component > 0.1);

    // Dimension 2 confined to a sign-mixed plane: components of any
    // combination of (e1 - e2) and (e3 - e4) cannot all be positive.
    const double a = inv2, b = -inv2;
    auto r4 = find_positive_vector({{a, b, 0.0, 0.0}, {0.0, 0.0, a, b}}, 1e-8);
    CHECK_FALSE(r4.found);
}

TEST_CASE("simplex-constrained residual minimum") {
    // Identity: minimizing ||mu|| over the simplex gives the uniform point,
    // norm 1/2 for n = 4.
    Matrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1.0;
    CHECK(std::fabs(min_residual_on_simplex(id, 1e-3) - 0.5) < 1e-10);

    // A matrix whose nullspace meets the simplex: residual 0 at (1/2, 1/2).
    const auto c = make(2, 2, {1.0, -1.0, -1.0, 1.0});
    CHECK(min_residual_on_simplex(c, 1e-3) < 1e-12);

    // Forcing weight onto a penalized coordinate: c = diag(1, 0) pushes mu_1
    // to the floor, leaving residual = floor.
    const auto d = make(2, 2, {1.0, 0.0, 0.0, 0.0});
    CHECK(std::fabs(min_residual_on_simplex(d, 1e-3) - 1e-3) < 1e-12);
}

TEST_CASE("ols slope") {
    CHECK(std::fabs(ols_slope({0.0, 1.0, 2.0, 3.0}, {1.0, 3.0, 5.0, 7.0}) - 2.0) <
          1e-13);
    CHECK(std::fabs(ols_slope({1.0, 2.0, 3.0}, {5.0, 5.0, 5.0})) < 1e-13);
}
