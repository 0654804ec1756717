#pragma once
#include <functional>
#include <stdexcept>

namespace coorbital {

/// Thrown when an iterative numerical procedure fails to converge.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Find a root of fn in [a, b] given fn(a) and fn(b) of opposite sign
/// (either endpoint may also be an exact zero).
///
/// Brent-style zeroin: bisection safeguarded by secant / inverse quadratic
/// interpolation; converges to roughly machine precision in the abscissa.
/// Throws std::invalid_argument if the bracket does not change sign and
/// ConvergenceError if the iteration cap is hit (does not happen for
/// continuous fn, the cap is defensive).
double find_root(const std::function<double(double)>& fn, double a, double b,
                 double xtol = 1e-15);

} // namespace coorbital
