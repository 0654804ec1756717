#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "coorbital/bifurcation.hpp"
#include "coorbital/opposite.hpp"
#include "coorbital/root_find.hpp"

using namespace coorbital::bifurcation;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("critical ratio") {
    CHECK(critical_ratio() == 3.0 * std::sqrt(2.0) / 7.0);
    CHECK(std::fabs(critical_ratio() - 0.60609152673132645) < 1e-16);
}

TEST_CASE("h at hand-computed points") {
    // h(pi/3) = 1: the equal-mass kite.
    CHECK(std::fabs(eval_h(kPi / 3) - 1.0) < 1e-14);
    // h decreases towards the critical ratio at pi/2.
    const double near = eval_h(kPi / 2 - 1e-6);
    CHECK(near > critical_ratio());
    CHECK(near - critical_ratio() < 1e-9);
}

TEST_CASE("h is strictly decreasing") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> xdist(kPi / 6 + 1e-6,
                                                 kPi / 2 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
        double a = xdist(rng), b = xdist(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 1e-9) continue;
        CHECK(eval_h(a) > eval_h(b));
    }
}

TEST_CASE("kite angle at frozen ratios") {
    // Reference angles computed independently with 50-digit arithmetic.
    CHECK(std::fabs(kite_angle_for_ratio(1.0) - kPi / 3) < 1e-10);
    CHECK(std::fabs(kite_angle_for_ratio(10.0) - 0.5951899965295971) < 1e-12);
    CHECK(std::fabs(kite_angle_for_ratio(0.6062) - 1.5604528221032440) <
          1e-12);
    CHECK(std::fabs(kite_angle_for_ratio(0.7) - 1.2809298984400806) < 1e-12);
    CHECK(std::fabs(kite_angle_for_ratio(2.0) - 0.8140792940280342) < 1e-12);
}

TEST_CASE("kite angle round-trips through h") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> adist(critical_ratio() + 1e-6,
                                                 50.0);
    for (int i = 0; i < 200; ++i) {
        const double a = adist(rng);
        const double theta = kite_angle_for_ratio(a);
        CHECK(theta > kPi / 6);
        CHECK(theta < kPi / 2);
        CHECK(std::fabs(eval_h(theta) - a) < 1e-11);
    }
}

TEST_CASE("classification regimes") {
    CHECK(classify(0.3).regime == Regime::square_only);
    CHECK(classify(0.6060).regime == Regime::square_only);
    CHECK(classify(critical_ratio()).regime == Regime::critical);
    CHECK(classify(0.6062).regime == Regime::square_and_kite);
    CHECK(classify(1.0).regime == Regime::square_and_kite);

    CHECK_FALSE(classify(0.3).kite_theta1.has_value());
    const auto one = classify(1.0);
    REQUIRE(one.kite_theta1.has_value());
    CHECK(std::fabs(*one.kite_theta1 - kPi / 3) < 1e-10);
}

TEST_CASE("classification agrees with the root solver") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> adist(0.05, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double a = adist(rng);
        if (std::fabs(a - critical_ratio()) < 1e-7) continue;
        const auto cls = classify(a);
        const auto sol = coorbital::opposite::solve_opposite({a, 1.0});
        if (cls.regime == Regime::square_only) {
            CHECK(sol.class_count == 1);
        } else {
            CHECK(sol.class_count == 2);
            REQUIRE(cls.kite_theta1.has_value());
            // The solver's smallest root is the kite angle.
            CHECK(std::fabs(sol.roots.front() - *cls.kite_theta1) < 1e-9);
        }
    }
}

TEST_CASE("regime names") {
    CHECK(regime_name(Regime::square_only) == "square_only");
    CHECK(regime_name(Regime::critical) == "critical");
    CHECK(regime_name(Regime::square_and_kite) == "square_and_kite");
}

TEST_CASE("sweep spacing and regimes") {
    const auto low = sweep(0.1, 0.6, 6);
    REQUIRE(low.size() == 6);
    for (size_t i = 0; i < low.size(); ++i) {
        CHECK(std::fabs(low[i].a - (0.1 + 0.1 * i)) < 1e-12);
        CHECK(low[i].regime == Regime::square_only);
    }

    const auto high = sweep(0.7, 2.0, 14);
    REQUIRE(high.size() == 14);
    double prev = 10.0;
    for (const auto& row : high) {
        CHECK(row.regime == Regime::square_and_kite);
        REQUIRE(row.kite_theta1.has_value());
        // The kite angle decreases as the ratio grows (h is decreasing).
        CHECK(*row.kite_theta1 < prev);
        prev = *row.kite_theta1;
    }
    CHECK(std::fabs(high[3].a - 1.0) < 1e-12);
    CHECK(std::fabs(*high[3].kite_theta1 - kPi / 3) < 1e-10);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS((void)eval_h(kPi / 6), std::domain_error);
    CHECK_THROWS_AS((void)eval_h(kPi / 2), std::domain_error);
    CHECK_THROWS_AS((void)kite_angle_for_ratio(critical_ratio()),
                    std::domain_error);
    CHECK_THROWS_AS((void)kite_angle_for_ratio(0.5), std::domain_error);
    CHECK_THROWS_AS((void)classify(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)classify(-1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)sweep(1.0, 0.5, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)sweep(0.5, 1.0, 1), std::invalid_argument);
    // Ratios past h's guarded endpoint cannot be inverted.
    CHECK_THROWS_AS((void)kite_angle_for_ratio(1e12),
                    coorbital::ConvergenceError);
}
