#pragma once
#include <vector>

/// Analysis of the "opposite" family: four satellites with one diametrically
/// opposite pair. Fixing that pair on a diameter and eliminating the mass
/// scale reduces the balance system to a single equation g(theta_1) = 0 on
/// (0, pi) with
///
///   g(x) = f(x) + a2*f(2x) + a3*f(pi + x),
///
/// where a2 = mu2/mu1 and a3 = mu3/mu1 are the mass ratios of the adjacent
/// and the opposite satellite. Since g''' > 0 (each term's third derivative
/// is positive, the middle one carrying a factor 8), g has at most three
/// roots and they are isolated deterministically by the derivative cascade:
/// the unique root of g'', then the up-to-two roots of g', then one root of
/// g per monotone piece.
namespace coorbital::opposite {

struct OppositeParams {
    double a2 = 1.0; ///< adjacent-pair mass ratio, > 0
    double a3 = 1.0; ///< opposite-satellite mass ratio, > 0
};

/// Geometric class of a root of g. Kite/square labels are only meaningful
/// on the symmetric slice a3 = 1 where g(pi - x) = -g(x): there the root
/// pi/2 is the square and off-center roots pair as (x, pi - x), congruent
/// kites counted once. Away from a3 = 1 every root is its own class.
enum class ConfigClass { square, kite, generic };

struct SolutionClass {
    ConfigClass kind = ConfigClass::generic;
    double theta1 = 0.0;
};

struct SolutionSet {
    std::vector<double> roots;          ///< increasing, each with |g| < 1e-11
    std::vector<SolutionClass> classes; ///< congruence classes, by theta1
    int class_count = 0;
    bool tangency = false; ///< true when roots closer than 1e-8 were merged
};

/// g and its first three derivatives. Domain x in [guard, pi - guard] with
/// guard = kDomainGuard; params must be positive. std::domain_error /
/// std::invalid_argument otherwise.
double eval_g(double x, const OppositeParams& p);
double eval_g1(double x, const OppositeParams& p);
double eval_g2(double x, const OppositeParams& p);
double eval_g3(double x, const OppositeParams& p);

/// All roots of g on (0, pi) via the derivative cascade, classified.
SolutionSet solve_opposite(const OppositeParams& p);

/// Number of congruence classes (1, 2 or 3).
int count_classes(const OppositeParams& p);

/// Mass-ratio map l(x) = f(x) / f(pi - x) on (0, pi), singular at the
/// denominator root x = 2*pi/3: requires |x - 2*pi/3| > 1e-6.
double eval_l(double x);

/// p(x) = f'(x) f(pi-x) + f(x) f'(pi-x), the Wronskian-like combination
/// whose positivity on (0, pi) forces the opposite pair to have equal
/// masses. Symmetric about pi/2.
double eval_p(double x);

/// Brute-force root counter: sign scan of g on an n_points uniform grid of
/// (0, pi) with endpoint padding, each sign change refined by bisection.
/// Slow path kept as a cross-check for the cascade (CLI --check).
std::vector<double> grid_scan_roots(const OppositeParams& p, int n_points);

/// Scan of reduced collinear-adjacent configurations (theta_4 = pi, so one
/// satellite pair sits on a diameter through a *neighbouring* gap). Walks
/// the (theta_1, theta_2) simplex on a grid_steps x grid_steps lattice,
/// skipping points with theta_3 <= 0, and for each geometry measures how
/// close the interaction matrix comes to admitting positive masses.
/// counterexample_found reports whether any nullspace contained a unit
/// vector with all components > 1e-8 (it never does; that impossibility is
/// the point of the audit). min_feasible_residual is the minimum over the
/// grid of min { ||C mu|| : mu_i >= 1e-3, sum mu = 1 }, a strictly positive
/// margin. Requires grid_steps >= 100.
struct CollinearAuditReport {
    int grid_steps = 0;
    int points_checked = 0;
    bool counterexample_found = false;
    double min_feasible_residual = 0.0;
};
CollinearAuditReport audit_theorem1(int grid_steps);

/// Randomized audit of the equal-opposite-masses obstruction: checks
/// p > 0 on a fine grid and p's symmetry about pi/2, then samples
/// `samples` asymmetric opposite-pair geometries (theta_1 != theta_4) and
/// verifies none admits a positive mass nullspace vector. Requires
/// samples >= 100.
struct SymmetryAuditReport {
    int samples = 0;
    double p_min = 0.0;
    bool asymmetric_positive_found = false;
    bool passed = false;
};
SymmetryAuditReport audit_theorem2(int samples);

} // namespace coorbital::opposite
