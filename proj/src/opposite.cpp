#include "coorbital/opposite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "coorbital/coorbital_system.hpp"
#include "coorbital/kernel.hpp"
#include "coorbital/kernel_simd.hpp"
#include "coorbital/root_find.hpp"

namespace coorbital::opposite {

namespace {

constexpr double kPi = std::numbers::pi;

void require_params(const OppositeParams& p) {
    if (!(p.a2 > 0.0) || !(p.a3 > 0.0))
        throw std::invalid_argument("opposite: mass ratios must be positive");
}

void require_interior(double x) {
    if (!(x >= kDomainGuard && x <= kPi - kDomainGuard))
        throw std::domain_error("opposite: x must lie in [1e-9, pi - 1e-9]");
}

} // namespace

double eval_g(double x, const OppositeParams& p) {
    require_params(p);
    require_interior(x);
    return eval_f(x) + p.a2 * eval_f(2.0 * x) + p.a3 * eval_f(kPi + x);
}

double eval_g1(double x, const OppositeParams& p) {
    require_params(p);
    require_interior(x);
    return eval_f_derivatives(x).f1 + 2.0 * p.a2 * eval_f_derivatives(2.0 * x).f1 +
           p.a3 * eval_f_derivatives(kPi + x).f1;
}

double eval_g2(double x, const OppositeParams& p) {
    require_params(p);
    require_interior(x);
    return eval_f_derivatives(x).f2 + 4.0 * p.a2 * eval_f_derivatives(2.0 * x).f2 +
           p.a3 * eval_f_derivatives(kPi + x).f2;
}

double eval_g3(double x, const OppositeParams& p) {
    require_params(p);
    require_interior(x);
    return eval_f_derivatives(x).f3 + 8.0 * p.a2 * eval_f_derivatives(2.0 * x).f3 +
           p.a3 * eval_f_derivatives(kPi + x).f3;
}

namespace {

// Roots of g on a monotone piece [a, b] given the endpoint values; empty
// when the signs agree. Endpoint zeros count as roots.
void append_piece_root(std::vector<double>& roots,
                       const std::function<double(double)>& g, double a,
                       double fa, double b, double fb) {
    if (fa == 0.0) {
        roots.push_back(a);
        return;
    }
    if (fb == 0.0) {
        roots.push_back(b);
        return;
    }
    if (std::signbit(fa) != std::signbit(fb))
        roots.push_back(coorbital::find_root(g, a, b));
}

} // namespace

SolutionSet solve_opposite(const OppositeParams& p) {
    require_params(p);
    const double lo = kDomainGuard, hi = kPi - kDomainGuard;
    auto g = [&](double x) { return eval_g(x, p); };
    auto g1 = [&](double x) { return eval_g1(x, p); };
    auto g2 = [&](double x) { return eval_g2(x, p); };

    // g''' > 0, so g'' is strictly increasing from -inf to +inf: one root.
    const double x2 = coorbital::find_root(g2, lo, hi);

    std::vector<double> raw;
    const double slope_min = g1(x2); // global minimum of g'
    if (slope_min >= 0.0) {
        // g monotone increasing (-inf to +inf): a single root
        raw.push_back(coorbital::find_root(g, lo, hi));
    } else {
        // g' falls from +inf to slope_min then rises back to +inf: local max
        // of g at xl, local min at xr, three monotone pieces
        const double xl = coorbital::find_root(g1, lo, x2);
        const double xr = coorbital::find_root(g1, x2, hi);
        const double gl = g(xl), gr = g(xr);
        append_piece_root(raw, g, lo, g(lo), xl, gl);
        append_piece_root(raw, g, xl, gl, xr, gr);
        append_piece_root(raw, g, xr, gr, hi, g(hi));
    }

    std::sort(raw.begin(), raw.end());
    SolutionSet out;
    // merge near-coincident roots (tangency at bifurcation parameters)
    for (double r : raw) {
        if (!out.roots.empty() && r - out.roots.back() < 1e-8) {
            out.tangency = true;
            continue;
        }
        out.roots.push_back(r);
    }

    const bool symmetric = std::fabs(p.a3 - 1.0) < 1e-12;
    if (symmetric) {
        // With mu2 == mu4, g(pi - x) == -g(x) exactly, so the root set is
        // {pi/2} plus mirror pairs (r, pi - r). Classify from that structure
        // rather than by pairing roots within a fixed tolerance: near the
        // fold the computed positions carry noise of order eps/|g'(root)|,
        // which swamps any such tolerance, while the structure is stable.
        size_t mid = 0;
        for (size_t i = 1; i < out.roots.size(); ++i)
            if (std::fabs(out.roots[i] - 0.5 * kPi) <
                std::fabs(out.roots[mid] - 0.5 * kPi))
                mid = i;
        if (std::fabs(out.roots[mid] - 0.5 * kPi) < 1e-3)
            out.roots[mid] = 0.5 * kPi;
        if (out.roots.front() < 0.5 * kPi - 1e-8)
            out.classes.push_back({ConfigClass::kite, out.roots.front()});
        out.classes.push_back({ConfigClass::square, 0.5 * kPi});
    } else {
        for (double r : out.roots)
            out.classes.push_back({ConfigClass::generic, r});
    }
    out.class_count = static_cast<int>(out.classes.size());
    return out;
}

int count_classes(const OppositeParams& p) { return solve_opposite(p).class_count; }

double eval_l(double x) {
    require_interior(x);
    if (std::fabs(x - 2.0 * kPi / 3.0) <= 1e-6)
        throw std::domain_error("eval_l: singular near x = 2*pi/3");
    return eval_f(x) / eval_f(kPi - x);
}

double eval_p(double x) {
    require_interior(x);
    const KernelEval a = eval_f_derivatives(x);
    const KernelEval b = eval_f_derivatives(kPi - x);
    return a.f1 * b.f + a.f * b.f1;
}

std::vector<double> grid_scan_roots(const OppositeParams& p, int n_points) {
    require_params(p);
    if (n_points < 10)
        throw std::invalid_argument("grid_scan_roots: need at least 10 points");

    // g at the padded endpoints has known signs (g -> -inf at 0, +inf at pi)
    std::vector<double> xs(static_cast<size_t>(n_points) + 2);
    xs.front() = kDomainGuard;
    xs.back() = kPi - kDomainGuard;
    for (int k = 1; k <= n_points; ++k)
        xs[k] = kPi * k / (n_points + 1);
    std::vector<double> gs(xs.size());
    simd::eval_g_batch(p.a2, p.a3, xs, gs);

    auto g = [&](double x) { return eval_g(x, p); };
    std::vector<double> roots;
    for (size_t k = 1; k < xs.size(); ++k) {
        if (gs[k] == 0.0) {
            roots.push_back(xs[k]);
        } else if (std::signbit(gs[k - 1]) != std::signbit(gs[k]) &&
                   gs[k - 1] != 0.0) {
            roots.push_back(coorbital::find_root(g, xs[k - 1], xs[k], 1e-13));
        }
    }
    return roots;
}

CollinearAuditReport audit_theorem1(int grid_steps) {
    if (grid_steps < 100)
        throw std::invalid_argument("audit: grid_steps must be >= 100");

    CollinearAuditReport report;
    report.grid_steps = grid_steps;
    report.min_feasible_residual = std::numeric_limits<double>::infinity();

    // reduced geometry: gaps (t1, t2, pi - t1 - t2, pi), i.e. one satellite
    // pair antipodal across a consecutive gap. The interaction matrix rows
    // follow from f(pi) = 0 and f(2*pi - x) = -f(x).
    for (int i = 1; i < grid_steps; ++i) {
        const double t1 = kPi * i / grid_steps;
        for (int j = 1; j + i < grid_steps; ++j) {
            const double t2 = kPi * j / grid_steps;
            const double t3 = kPi - t1 - t2; // >= pi/grid_steps here
            const double f1 = eval_f(t1);
            const double f2 = eval_f(t2);
            const double f3 = eval_f(t3);
            const double fp1 = eval_f(kPi + t1);
            const double fp3 = eval_f(kPi + t3);

            linalg::Matrix c(4, 4);
            c.at(0, 1) = f1;
            c.at(0, 2) = -fp3;
            c.at(1, 0) = -f1;
            c.at(1, 2) = f2;
            c.at(1, 3) = -fp1;
            c.at(2, 0) = fp3;
            c.at(2, 1) = -f2;
            c.at(2, 3) = f3;
            c.at(3, 1) = fp1;
            c.at(3, 2) = -f3;

            const double margin = linalg::min_residual_on_simplex(c, 1e-3);
            report.min_feasible_residual =
                std::fmin(report.min_feasible_residual, margin);
            if (margin < 1e-10) report.counterexample_found = true;

            // The matrix entries here are exact kernel evaluations, so a
            // genuine nullspace shows up at rounding level. A looser relative
            // cut would misread the huge singular-value spread near the
            // collision corners (|f| ~ 1/t^2) as a rank drop.
            const linalg::Nullspace ns = linalg::nullspace(c, 1e-13);
            if (ns.dimension > 0 &&
                linalg::find_positive_vector(ns.basis, 1e-8).found)
                report.counterexample_found = true;

            ++report.points_checked;
        }
    }
    return report;
}

SymmetryAuditReport audit_theorem2(int samples) {
    if (samples < 100)
        throw std::invalid_argument("audit: samples must be >= 100");

    SymmetryAuditReport report;
    report.samples = samples;
    report.p_min = std::numeric_limits<double>::infinity();

    // p > 0 on (0, pi) is the obstruction; scan it on a fixed fine grid
    const int p_grid = 2000;
    for (int k = 1; k < p_grid; ++k) {
        const double x = kPi * k / p_grid;
        report.p_min = std::fmin(report.p_min, eval_p(x));
    }

    // asymmetric opposite-pair geometries (t1 != t4) must never admit
    // positive masses
    std::mt19937_64 rng(0x5EED5150u);
    std::uniform_real_distribution<double> angle(0.05 * kPi, 0.95 * kPi);
    int done = 0;
    while (done < samples) {
        const double t1 = angle(rng), t4 = angle(rng);
        if (std::fabs(t1 - t4) < 0.02) continue;
        const AngleConfig config({t1, kPi - t1, kPi - t4, t4});
        const linalg::Nullspace ns = solve_masses(config);
        if (ns.dimension > 0 &&
            linalg::find_positive_vector(ns.basis, 1e-8).found)
            report.asymmetric_positive_found = true;
        ++done;
    }

    report.passed = report.p_min > 0.0 && !report.asymmetric_positive_found;
    return report;
}

} // namespace coorbital::opposite
