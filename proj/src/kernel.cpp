#include "coorbital/kernel.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "coorbital/root_find.hpp"

namespace coorbital {

namespace {

void require_domain(double x) {
    if (!(x >= kDomainGuard && x <= kTwoPi - kDomainGuard))
        throw std::domain_error(
            "kernel: x must lie in [1e-9, 2*pi - 1e-9]");
}

} // namespace

double eval_f(double x) {
    require_domain(x);
    const double s = std::fabs(std::sin(0.5 * x)); // sin(x/2) > 0 on (0, 2*pi)
    assert(std::sin(0.5 * x) > 0.0);
    return std::sin(x) * (1.0 - 1.0 / (8.0 * s * s * s));
}

KernelEval eval_f_derivatives(double x) {
    require_domain(x);
    const double s = std::sin(0.5 * x);
    const double c = std::cos(0.5 * x);
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s2 * s2;
    const double s5 = s4 * s;
    KernelEval out;
    out.x = x;
    out.f = sx * (1.0 - 1.0 / (8.0 * s3));
    out.f1 = cx + (3.0 + cx) / (16.0 * s3);
    out.f2 = -sx - c * (6.0 - s2) / (16.0 * s4);
    out.f3 = -cx + (24.0 - 20.0 * s2 + s4) / (32.0 * s5);
    return out;
}

double critical_point() {
    // unique root of f' between 3*pi/5 (where f' > 0 still) and 0.62*pi
    static const double theta_c = [] {
        const double lo = 3.0 * std::numbers::pi / 5.0;
        const double hi = 0.62 * std::numbers::pi;
        return find_root([](double x) { return eval_f_derivatives(x).f1; }, lo, hi);
    }();
    return theta_c;
}

std::array<double, 3> roots_of_f() {
    static const std::array<double, 3> roots = [] {
        auto f = [](double x) { return eval_f(x); };
        return std::array<double, 3>{
            find_root(f, 0.5, 1.5), // pi/3
            find_root(f, 2.5, 3.5), // pi
            find_root(f, 4.8, 5.7), // 5*pi/3
        };
    }();
    return roots;
}

} // namespace coorbital
