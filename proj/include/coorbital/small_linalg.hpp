#pragma once
#include <vector>

/// Dense linear algebra for very small systems (n <= ~8): SVD nullspaces of
/// interaction matrices, pivoted Gauss solves for KKT systems, and the
/// positivity searches used by the audits. Row-major storage throughout.
namespace coorbital::linalg {

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
    double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

/// Singular values (descending) and right singular vectors (columns of v,
/// same order) via one-sided Jacobi orthogonalization. v is orthonormal to
/// machine precision; ||A v_j|| = sigma_j.
struct Svd {
    std::vector<double> sigma;
    Matrix v;
};
Svd svd(const Matrix& a);

/// Right nullspace of a: right singular vectors whose sigma <= rel_tol * sigma_max
/// (all of them when sigma_max == 0). Basis vectors are orthonormal.
struct Nullspace {
    int dimension = 0;
    std::vector<std::vector<double>> basis;
};
Nullspace nullspace(const Matrix& a, double rel_tol = 1e-10);

/// Solve a x = b by Gaussian elimination with partial pivoting.
/// Returns false when a pivot degenerates (singular system).
bool solve(Matrix a, std::vector<double> b, std::vector<double>& x);

/// Search span(basis) for a unit vector with every component > threshold.
/// basis vectors are assumed orthonormal. Exhaustive for dimension <= 1,
/// a fine angular scan plus local refinement for dimension 2, and a seeded
/// random scan for dimension >= 3 (which does not occur in this problem).
struct PositiveVector {
    bool found = false;
    std::vector<double> vec;
    double min_component = 0.0;
};
PositiveVector find_positive_vector(const std::vector<std::vector<double>>& basis,
                                    double threshold);

/// Exact minimum of ||c mu||_2 over the floored simplex
/// { mu : mu_i >= floor, sum mu_i = 1 }, by enumerating all active-set faces
/// of the QP (c has at most 8 columns). The floor keeps the metric away from
/// degenerate nonnegative solutions with zero entries.
double min_residual_on_simplex(const Matrix& c, double floor_value);

/// Ordinary least squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace coorbital::linalg
