#include "coorbital/root_find.hpp"

#include <cmath>

namespace coorbital {

double find_root(const std::function<double(double)>& fn, double a, double b,
                 double xtol) {
    if (!(xtol > 0.0))
        throw std::invalid_argument("find_root: xtol must be positive");
    double fa = fn(a), fb = fn(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("find_root: endpoints do not bracket a root");

    // classic zeroin: b is the best iterate, a the previous one, c the
    // counterpoint keeping the bracket sign-changing
    double c = a, fc = fa;
    double d = b - a, e = d;
    const int kMaxIter = 300;
    for (int it = 0; it < kMaxIter; ++it) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1.11e-16 * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // secant (two points) or inverse quadratic (three points)
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol1 * q),
                                    std::fabs(e * q))) {
                e = d; // interpolation accepted
                d = p / q;
            } else {
                d = xm; // fall back to bisection
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = fn(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    throw ConvergenceError("find_root: iteration cap exceeded");
}

} // namespace coorbital
