#include "coorbital/bifurcation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coorbital/kernel.hpp"
#include "coorbital/root_find.hpp"

namespace coorbital::bifurcation {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHGuard = 1e-9;

double h_raw(double x) {
    return (-eval_f(kPi + x) - eval_f(x)) / eval_f(2.0 * x);
}

// dh/dx, used to polish the bisection result below 1e-11 in |h - a|
double h1_raw(double x) {
    const KernelEval fx = eval_f_derivatives(x);
    const KernelEval fpx = eval_f_derivatives(kPi + x);
    const KernelEval f2x = eval_f_derivatives(2.0 * x);
    const double num = -fpx.f - fx.f;
    const double num1 = -fpx.f1 - fx.f1;
    return (num1 * f2x.f - num * 2.0 * f2x.f1) / (f2x.f * f2x.f);
}

// inverse of h without the public precondition margin; classify() needs it
// slightly closer to the critical ratio than kite_angle_for_ratio admits
double invert_h(double a) {
    const double lo = kPi / 6.0 + kHGuard;
    const double hi = kPi / 2.0 - kHGuard;
    if (h_raw(lo) <= a)
        throw ConvergenceError(
            "kite_angle_for_ratio: ratio beyond the guarded range of h");
    // h is strictly decreasing with h(hi) just above the critical ratio
    double x = find_root([&](double t) { return h_raw(t) - a; }, lo, hi);
    for (int it = 0; it < 8 && std::fabs(h_raw(x) - a) > 1e-12; ++it) {
        const double step = (h_raw(x) - a) / h1_raw(x);
        const double next = x - step;
        if (next <= lo || next >= hi) break;
        x = next;
    }
    return x;
}

} // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::square_only: return "square_only";
        case Regime::critical: return "critical";
        case Regime::square_and_kite: return "square_and_kite";
    }
    throw std::logic_error("regime_name: unreachable");
}

double critical_ratio() { return 3.0 * std::sqrt(2.0) / 7.0; }

double eval_h(double x) {
    if (!(x >= kPi / 6.0 + kHGuard && x <= kPi / 2.0 - kHGuard))
        throw std::domain_error("eval_h: x must lie in [pi/6 + 1e-9, pi/2 - 1e-9]");
    return h_raw(x);
}

double kite_angle_for_ratio(double a) {
    if (!(a > critical_ratio() + 1e-10))
        throw std::domain_error(
            "kite_angle_for_ratio: ratio must exceed 3*sqrt(2)/7 + 1e-10");
    return invert_h(a);
}

BifurcationResult classify(double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("classify: ratio must be positive");
    BifurcationResult out;
    out.a = a;
    const double crit = critical_ratio();
    if (std::fabs(a - crit) <= 1e-12) {
        out.regime = Regime::critical;
    } else if (a < crit) {
        out.regime = Regime::square_only;
    } else {
        out.regime = Regime::square_and_kite;
        out.kite_theta1 = invert_h(a);
    }
    return out;
}

std::vector<BifurcationResult> sweep(double a_min, double a_max, int steps) {
    if (!(a_min > 0.0) || !(a_max > a_min))
        throw std::invalid_argument("sweep: need 0 < a_min < a_max");
    if (steps < 2)
        throw std::invalid_argument("sweep: need at least 2 steps");
    std::vector<BifurcationResult> rows;
    rows.reserve(steps);
    for (int k = 0; k < steps; ++k)
        rows.push_back(classify(a_min + (a_max - a_min) * k / (steps - 1)));
    return rows;
}

} // namespace coorbital::bifurcation
