#pragma once
#include <optional>
#include <string>
#include <vector>

/// Bifurcation structure of the symmetric slice a3 = 1 (equal opposite
/// masses, common adjacent ratio a = a2). The square theta_1 = pi/2 solves
/// g = 0 for every a; kites branch off it at the critical ratio
///
///   a* = 3*sqrt(2)/7 = 0.60609152673132645...,
///
/// where g'(pi/2) = (3*sqrt(2) - 7a)/4 changes sign. For a > a* the kite
/// angle is the unique preimage of a under the strictly decreasing map
///
///   h(x) = (-f(pi + x) - f(x)) / f(2x),   x in (pi/6, pi/2),
///
/// which sends (pi/6, pi/2) onto (a*, +inf) and has h(pi/3) = 1.
namespace coorbital::bifurcation {

enum class Regime { square_only, critical, square_and_kite };

/// CSV/JSON name of a regime (square_only, critical, square_and_kite).
std::string regime_name(Regime r);

struct BifurcationResult {
    double a = 0.0;
    Regime regime = Regime::square_only;
    std::optional<double> kite_theta1; ///< present iff regime is square_and_kite
};

/// 3*sqrt(2)/7.
double critical_ratio();

/// h(x); requires x in [pi/6 + 1e-9, pi/2 - 1e-9] (std::domain_error outside).
double eval_h(double x);

/// Inverse of h: the kite angle for ratio a. Requires
/// a > critical_ratio() + 1e-10 (std::domain_error otherwise). The angle is
/// resolved to machine precision, giving |h(theta) - a| < 1e-11 for ratios
/// up to ~1e3 (beyond that h moves more than 1e-11 per ulp of the angle, so
/// only the angle itself is exact). Ratios beyond h's guarded left endpoint
/// (about 7.9e8) raise ConvergenceError.
double kite_angle_for_ratio(double a);

/// Regime of a mass ratio a > 0: square_only below the critical ratio,
/// critical within 1e-12 of it, square_and_kite above (with the kite angle
/// attached). std::invalid_argument for a <= 0.
BifurcationResult classify(double a);

/// classify() on `steps` uniformly spaced ratios from a_min to a_max
/// inclusive. Requires 0 < a_min < a_max and steps >= 2.
std::vector<BifurcationResult> sweep(double a_min, double a_max, int steps);

} // namespace coorbital::bifurcation
