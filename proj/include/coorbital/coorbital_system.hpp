#pragma once
#include <array>
#include <vector>

#include "coorbital/small_linalg.hpp"

/// The coorbital balance system for one dominant central mass and n
/// infinitesimal satellites on the unit circle. With consecutive angular
/// gaps theta_1..theta_n (summing to 2*pi), satellite k is in tangential
/// equilibrium iff
///
///   sum_{j=1}^{n-1} mu_{k+j} * f(theta_k + ... + theta_{k+j-1}) = 0,
///
/// indices cyclic. residuals() returns that left-hand side for every k;
/// a configuration plus masses is a central configuration of the limit
/// problem iff all residuals vanish.
namespace coorbital {

/// Validated gap vector: every theta in (0, 2*pi), the sum equal to 2*pi
/// within 1e-12, and no cumulative separation within kDomainGuard of a full
/// or empty turn (satellite collision). Construction throws
/// std::invalid_argument when violated.
class AngleConfig {
  public:
    explicit AngleConfig(std::vector<double> thetas);

    int size() const { return static_cast<int>(thetas_.size()); }
    const std::vector<double>& thetas() const { return thetas_; }

    /// Angular separation from satellite `from` to satellite `to` (0-based),
    /// walking in the positive direction; lies in (0, 2*pi) for from != to.
    double separation(int from, int to) const;

  private:
    std::vector<double> thetas_;
};

/// Validated mass multipliers (all strictly positive).
class MassVector {
  public:
    explicit MassVector(std::vector<double> mus);

    int size() const { return static_cast<int>(mus_.size()); }
    const std::vector<double>& mus() const { return mus_; }

  private:
    std::vector<double> mus_;
};

/// Interaction matrix C with C[k][j] = f(separation(k, j)), zero diagonal,
/// so that residuals = C * mu.
linalg::Matrix coefficient_matrix(const AngleConfig& config);

/// Tangential imbalance at every satellite. Requires matching sizes.
std::vector<double> residuals(const AngleConfig& config, const MassVector& mus);

/// The n=4 system written out term by term (one addition order per the
/// four-equation form used in the opposite-case analysis). Agrees with
/// residuals() to rounding; kept as an independent formulation for tests.
///   r1 = mu2 f(t1) + mu3 f(t1+t2) - mu4 f(t4)
///   r2 = mu3 f(t2) + mu4 f(t2+t3) - mu1 f(t1)
///   r3 = mu4 f(t3) + mu1 f(t3+t4) - mu2 f(t2)
///   r4 = mu1 f(t4) + mu2 f(t4+t1) - mu3 f(t3)
std::array<double, 4> residuals_1p4(const std::array<double, 4>& thetas,
                                    const std::array<double, 4>& mus);

/// Orthonormal basis of the mass nullspace { mu : C mu = 0 } for a given
/// geometry, with singular values below 1e-10 * sigma_max treated as zero.
/// Requires n >= 3.
linalg::Nullspace solve_masses(const AngleConfig& config);

/// max_k |residual_k| < tol.
bool is_central_configuration(const AngleConfig& config, const MassVector& mus,
                              double tol = 1e-10);

} // namespace coorbital
