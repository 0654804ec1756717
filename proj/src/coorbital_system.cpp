#include "coorbital/coorbital_system.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbital/kernel.hpp"

namespace coorbital {

AngleConfig::AngleConfig(std::vector<double> thetas) : thetas_(std::move(thetas)) {
    const int n = static_cast<int>(thetas_.size());
    if (n < 2)
        throw std::invalid_argument("AngleConfig: need at least 2 gaps");
    double sum = 0.0;
    for (double t : thetas_) {
        if (!(t > 0.0 && t < kTwoPi))
            throw std::invalid_argument("AngleConfig: every gap must lie in (0, 2*pi)");
        sum += t;
    }
    if (std::fabs(sum - kTwoPi) > 1e-12)
        throw std::invalid_argument("AngleConfig: gaps must sum to 2*pi within 1e-12");
    // collision guard: every pairwise separation must stay clear of 0 / 2*pi
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 1; j < n; ++j) {
            acc += thetas_[(i + j - 1) % n];
            if (acc < kDomainGuard || acc > kTwoPi - kDomainGuard)
                throw std::invalid_argument(
                    "AngleConfig: satellites collide (cumulative angle within "
                    "1e-9 of 0 or 2*pi)");
        }
    }
}

double AngleConfig::separation(int from, int to) const {
    const int n = size();
    if (from < 0 || from >= n || to < 0 || to >= n || from == to)
        throw std::invalid_argument("separation: bad satellite index pair");
    double acc = 0.0;
    for (int j = from; j != to; j = (j + 1) % n) acc += thetas_[j];
    return acc;
}

MassVector::MassVector(std::vector<double> mus) : mus_(std::move(mus)) {
    if (mus_.empty())
        throw std::invalid_argument("MassVector: empty");
    for (double m : mus_)
        if (!(m > 0.0))
            throw std::invalid_argument("MassVector: masses must be positive");
}

linalg::Matrix coefficient_matrix(const AngleConfig& config) {
    const int n = config.size();
    linalg::Matrix c(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if (j != k) c.at(k, j) = eval_f(config.separation(k, j));
    return c;
}

std::vector<double> residuals(const AngleConfig& config, const MassVector& mus) {
    const int n = config.size();
    if (mus.size() != n)
        throw std::invalid_argument("residuals: mass/gap dimension mismatch");
    const linalg::Matrix c = coefficient_matrix(config);
    std::vector<double> r(n, 0.0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r[k] += c.at(k, j) * mus.mus()[j];
    return r;
}

std::array<double, 4> residuals_1p4(const std::array<double, 4>& thetas,
                                    const std::array<double, 4>& mus) {
    AngleConfig config(std::vector<double>(thetas.begin(), thetas.end()));
    MassVector check(std::vector<double>(mus.begin(), mus.end()));
    const double t1 = thetas[0], t2 = thetas[1], t3 = thetas[2], t4 = thetas[3];
    const double m1 = mus[0], m2 = mus[1], m3 = mus[2], m4 = mus[3];
    return {
        m2 * eval_f(t1) + m3 * eval_f(t1 + t2) - m4 * eval_f(t4),
        m3 * eval_f(t2) + m4 * eval_f(t2 + t3) - m1 * eval_f(t1),
        m4 * eval_f(t3) + m1 * eval_f(t3 + t4) - m2 * eval_f(t2),
        m1 * eval_f(t4) + m2 * eval_f(t4 + t1) - m3 * eval_f(t3),
    };
}

linalg::Nullspace solve_masses(const AngleConfig& config) {
    if (config.size() < 3)
        throw std::invalid_argument("solve_masses: need at least 3 satellites");
    return linalg::nullspace(coefficient_matrix(config), 1e-10);
}

bool is_central_configuration(const AngleConfig& config, const MassVector& mus,
                              double tol) {
    double worst = 0.0;
    for (double r : residuals(config, mus)) worst = std::fmax(worst, std::fabs(r));
    return worst < tol;
}

} // namespace coorbital
