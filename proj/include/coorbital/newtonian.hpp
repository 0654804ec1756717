#pragma once
#include <array>
#include <vector>

/// Full-force verification layer: embeds a coorbital configuration as an
/// actual 5-body state (central mass 1, satellite masses eps*mu_i) and
/// measures how well it satisfies the central-configuration equation
///
///   M^{-1} grad_q V = lambda q,   V = sum_{i<j} m_i m_j / r_ij,
///
/// in center-of-mass coordinates. With this (positive) V the force is
/// attractive and the fitted lambda is negative, |lambda_fit| -> 1 as
/// eps -> 0 (Keplerian circular limit). Residuals of configurations that
/// solve the limit system scale as O(eps) apart from exactly symmetric
/// cases; the equal-mass square embeds to an exact equilibrium at every
/// eps, so its residual sits at rounding level.
namespace coorbital::newtonian {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

Vec2 operator+(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a, Vec2 b);
Vec2 operator*(double s, Vec2 v);
double dot(Vec2 a, Vec2 b);
double norm(Vec2 v);

/// Five bodies in center-of-mass coordinates; body 0 is the central mass.
struct FullBodyState {
    std::array<Vec2, 5> positions;
    std::array<double, 5> masses;
    double epsilon = 0.0;
};

/// Place the central body at the origin and the satellites at cumulative
/// angles (0, t1, t1+t2, t1+t2+t3) on the unit circle with masses eps*mu_i,
/// then shift everything to the center of mass (sum m_i q_i = 0 to
/// rounding). Requires a valid gap vector (positive entries summing to
/// 2*pi within 1e-12, no collision), positive mus, and eps in (0, 0.1].
FullBodyState embed_positions(const std::array<double, 4>& thetas,
                              const std::array<double, 4>& mus, double eps);

/// V = sum_{i<j} m_i m_j / r_ij.
double potential(const FullBodyState& state);

/// d V / d q_i for every body (so the acceleration of body i is
/// gradient[i] / m_i). Gradients sum to zero. Throws std::domain_error on
/// near-collision (pairwise distance < 1e-9).
std::array<Vec2, 5> potential_gradient(const FullBodyState& state);

/// Least-squares fit of the CC equation at a state.
struct CCFitReport {
    double lambda_fit = 0.0;    ///< argmin_lambda sum_i |A_i - lambda q_i|^2 (signed)
    double residual_norm = 0.0; ///< max over bodies of |A_i - lambda_fit q_i|
    double epsilon = 0.0;
};
CCFitReport cc_fit(const FullBodyState& state);

/// cc_fit across an epsilon list plus the log-log OLS slope of
/// residual_norm against eps. eps_list must hold >= 3 strictly decreasing
/// positive values spanning at least two decades.
struct ScalingReport {
    double slope = 0.0;
    std::vector<CCFitReport> points;
};
ScalingReport epsilon_scaling_check(const std::array<double, 4>& thetas,
                                    const std::array<double, 4>& mus,
                                    const std::vector<double>& eps_list);

} // namespace coorbital::newtonian
