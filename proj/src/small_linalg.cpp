#include "coorbital/small_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace coorbital::linalg {

Svd svd(const Matrix& a) {
    const int m = a.rows, n = a.cols;
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("svd: empty matrix");

    // one-sided Jacobi: orthogonalize column pairs of w until A^T A is
    // diagonal; column norms become the singular values and the accumulated
    // rotations the right singular vectors
    Matrix w = a;
    Matrix v(n, n);
    for (int j = 0; j < n; ++j) v.at(j, j) = 1.0;

    const double tol = 1e-15;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < m; ++i) {
                    app += w.at(i, p) * w.at(i, p);
                    aqq += w.at(i, q) * w.at(i, q);
                    apq += w.at(i, p) * w.at(i, q);
                }
                if (std::fabs(apq) <= tol * std::sqrt(app * aqq) || apq == 0.0)
                    continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(
                    1.0 / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta)), zeta);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < m; ++i) {
                    const double wp = w.at(i, p), wq = w.at(i, q);
                    w.at(i, p) = c * wp - s * wq;
                    w.at(i, q) = s * wp + c * wq;
                }
                for (int i = 0; i < n; ++i) {
                    const double vp = v.at(i, p), vq = v.at(i, q);
                    v.at(i, p) = c * vp - s * vq;
                    v.at(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += w.at(i, j) * w.at(i, j);
        sigma[j] = std::sqrt(sum);
    }

    // descending order, permuting v's columns alongside
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return sigma[i] > sigma[j]; });
    Svd out;
    out.sigma.resize(n);
    out.v = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.sigma[j] = sigma[order[j]];
        for (int i = 0; i < n; ++i) out.v.at(i, j) = v.at(i, order[j]);
    }
    return out;
}

Nullspace nullspace(const Matrix& a, double rel_tol) {
    const Svd s = svd(a);
    const double cutoff = s.sigma.front() * rel_tol;
    Nullspace out;
    for (int j = 0; j < a.cols; ++j) {
        if (s.sigma[j] > cutoff) continue;
        std::vector<double> basis_vec(a.cols);
        for (int i = 0; i < a.cols; ++i) basis_vec[i] = s.v.at(i, j);
        out.basis.push_back(std::move(basis_vec));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

bool solve(Matrix a, std::vector<double> b, std::vector<double>& x) {
    const int n = a.rows;
    if (a.cols != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve: shape mismatch");
    double scale = 0.0;
    for (double v : a.data) scale = std::fmax(scale, std::fabs(v));
    const double tiny = std::fmax(scale, 1.0) * 1e-14;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a.at(i, k)) > std::fabs(a.at(piv, k))) piv = i;
        if (std::fabs(a.at(piv, k)) < tiny) return false;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double fac = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= fac * a.at(k, j);
            b[i] -= fac * b[k];
        }
    }
    x.assign(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double sum = b[i];
        for (int j = i + 1; j < n; ++j) sum -= a.at(i, j) * x[j];
        x[i] = sum / a.at(i, i);
    }
    return true;
}

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double min_component(const std::vector<double>& v) {
    double m = v.front();
    for (double c : v) m = std::fmin(m, c);
    return m;
}

std::vector<double> combine(const std::vector<std::vector<double>>& basis,
                            const std::vector<double>& coeff) {
    std::vector<double> out(basis.front().size(), 0.0);
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t i = 0; i < out.size(); ++i) out[i] += coeff[k] * basis[k][i];
    return out;
}

} // namespace

PositiveVector find_positive_vector(const std::vector<std::vector<double>>& basis,
                                    double threshold) {
    PositiveVector best;
    if (basis.empty()) return best;
    const int dim = static_cast<int>(basis.size());

    auto consider = [&](const std::vector<double>& v) {
        const double mc = min_component(v);
        if (!best.found || mc > best.min_component) {
            best.vec = v;
            best.min_component = mc;
            best.found = true;
        }
    };

    if (dim == 1) {
        consider(basis[0]);
        std::vector<double> neg = basis[0];
        for (double& c : neg) c = -c;
        consider(neg);
    } else if (dim == 2) {
        // unit circle in the orthonormal basis plane; coarse scan plus a
        // ternary refinement around the best angle
        const int steps = 7200;
        double best_t = 0.0;
        for (int k = 0; k < steps; ++k) {
            const double t = kTau * k / steps;
            const std::vector<double> v =
                combine(basis, {std::cos(t), std::sin(t)});
            const double mc = min_component(v);
            if (!best.found || mc > best.min_component) {
                best_t = t;
                consider(v);
            }
        }
        double lo = best_t - kTau / steps, hi = best_t + kTau / steps;
        for (int it = 0; it < 80; ++it) {
            const double t1 = lo + (hi - lo) / 3.0, t2 = hi - (hi - lo) / 3.0;
            const double m1 =
                min_component(combine(basis, {std::cos(t1), std::sin(t1)}));
            const double m2 =
                min_component(combine(basis, {std::cos(t2), std::sin(t2)}));
            if (m1 < m2)
                lo = t1;
            else
                hi = t2;
        }
        const double t = 0.5 * (lo + hi);
        consider(combine(basis, {std::cos(t), std::sin(t)}));
    } else {
        // does not occur for this problem's matrices; seeded random probe
        std::mt19937_64 rng(0xC0083174u);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < 50000; ++k) {
            std::vector<double> coeff(dim);
            double nrm = 0.0;
            for (double& c : coeff) {
                c = gauss(rng);
                nrm += c * c;
            }
            nrm = std::sqrt(nrm);
            for (double& c : coeff) c /= nrm;
            consider(combine(basis, coeff));
        }
    }

    best.found = best.min_component > threshold;
    return best;
}

double min_residual_on_simplex(const Matrix& c, double floor_value) {
    const int n = c.cols;
    if (n < 1 || n > 8)
        throw std::invalid_argument("min_residual_on_simplex: 1..8 columns");
    if (!(floor_value >= 0.0) || n * floor_value >= 1.0)
        throw std::invalid_argument("min_residual_on_simplex: bad floor");

    auto objective = [&](const std::vector<double>& mu) {
        double sum = 0.0;
        for (int i = 0; i < c.rows; ++i) {
            double r = 0.0;
            for (int j = 0; j < n; ++j) r += c.at(i, j) * mu[j];
            sum += r * r;
        }
        return std::sqrt(sum);
    };

    double best = std::numeric_limits<double>::infinity();
    // every nonempty subset S of coordinates free, the rest clamped at the
    // floor; minimize ||C mu||^2 on the affine slice via its KKT system
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> free_idx;
        for (int j = 0; j < n; ++j)
            if (mask & (1 << j)) free_idx.push_back(j);
        const int k = static_cast<int>(free_idx.size());
        const double budget = 1.0 - (n - k) * floor_value;
        if (budget < k * floor_value - 1e-15) continue;

        // residual offset from the clamped coordinates
        std::vector<double> base(c.rows, 0.0);
        for (int i = 0; i < c.rows; ++i)
            for (int j = 0; j < n; ++j)
                if (!(mask & (1 << j))) base[i] += c.at(i, j) * floor_value;

        // KKT: [A^T A, 1; 1^T, 0] [x; nu] = [-A^T base; budget]
        Matrix kkt(k + 1, k + 1);
        std::vector<double> rhs(k + 1, 0.0);
        for (int p = 0; p < k; ++p) {
            for (int q = 0; q < k; ++q) {
                double dot = 0.0;
                for (int i = 0; i < c.rows; ++i)
                    dot += c.at(i, free_idx[p]) * c.at(i, free_idx[q]);
                kkt.at(p, q) = dot;
            }
            kkt.at(p, p) += 1e-13; // ridge keeps singular faces solvable
            kkt.at(p, k) = 1.0;
            kkt.at(k, p) = 1.0;
            double dot = 0.0;
            for (int i = 0; i < c.rows; ++i)
                dot += c.at(i, free_idx[p]) * base[i];
            rhs[p] = -dot;
        }
        rhs[k] = budget;

        std::vector<double> sol;
        if (!solve(kkt, rhs, sol)) continue;

        std::vector<double> mu(n, floor_value);
        bool feasible = true;
        for (int p = 0; p < k; ++p) {
            mu[free_idx[p]] = sol[p];
            if (sol[p] < floor_value - 1e-12) feasible = false;
        }
        if (feasible) best = std::fmin(best, objective(mu));
    }
    return best;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols_slope: need >= 2 matching points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace coorbital::linalg
