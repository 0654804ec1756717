#pragma once
#include <array>
#include <numbers>

/// Scalar reference kernel for the coorbital interaction function
///
///   f(x) = sin(x) * (1 - 1/(8*|sin(x/2)|^3)),   x in (0, 2*pi),
///
/// which measures the tangential force imbalance between two satellites
/// separated by angle x on the unit circle around a dominant central mass.
/// Key analytic facts used throughout the library and its tests:
///   * f(pi/3) = f(pi) = f(5*pi/3) = 0 are the only zeros,
///   * f(2*pi - x) = -f(x) and f(pi - x) = -f(pi + x),
///   * f' >= -7/8 with equality exactly at x = pi,
///   * f''' > 0 on the whole domain,
///   * f has a single interior maximum at theta_c in (3*pi/5, 0.62*pi);
///     numerically theta_c = 1.8910822898493836 (computed, not tabulated).
namespace coorbital {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Half-open neighbourhoods of the singular endpoints 0 and 2*pi are
/// excluded: every kernel evaluation requires x in [kDomainGuard, 2*pi - kDomainGuard].
inline constexpr double kDomainGuard = 1e-9;

/// Value and first three derivatives of f at a point.
struct KernelEval {
    double x;
    double f;
    double f1;
    double f2;
    double f3;
};

/// f(x). Throws std::domain_error outside the guarded domain.
double eval_f(double x);

/// f together with the closed-form derivatives
///   f'(x)   = cos(x) + (3 + cos(x)) / (16 s^3)
///   f''(x)  = -sin(x) - c (6 - s^2) / (16 s^4)
///   f'''(x) = -cos(x) + (24 - 20 s^2 + s^4) / (32 s^5)
/// with s = sin(x/2), c = cos(x/2). Same domain contract as eval_f.
KernelEval eval_f_derivatives(double x);

/// The unique root of f' in (0, pi), i.e. the location of the maximum of f.
/// Solved to |f'| < 1e-13 on first use and cached.
double critical_point();

/// The three roots of f in increasing order (pi/3, pi, 5*pi/3 up to 1e-12),
/// each solved independently from a sign-changing bracket.
std::array<double, 3> roots_of_f();

} // namespace coorbital
