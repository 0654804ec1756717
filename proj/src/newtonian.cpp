#include "coorbital/newtonian.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbital/coorbital_system.hpp"
#include "coorbital/kernel.hpp"
#include "coorbital/small_linalg.hpp"

namespace coorbital::newtonian {

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 v) { return std::hypot(v.x, v.y); }

FullBodyState embed_positions(const std::array<double, 4>& thetas,
                              const std::array<double, 4>& mus, double eps) {
    // reuse the gap/mass validation (positivity, 2*pi sum, collisions)
    AngleConfig config(std::vector<double>(thetas.begin(), thetas.end()));
    MassVector mass_check(std::vector<double>(mus.begin(), mus.end()));
    if (!(eps > 0.0 && eps <= 0.1))
        throw std::invalid_argument("embed_positions: eps must lie in (0, 0.1]");

    FullBodyState state;
    state.epsilon = eps;
    state.masses[0] = 1.0;
    state.positions[0] = {0.0, 0.0};
    double phi = 0.0;
    for (int i = 0; i < 4; ++i) {
        state.positions[i + 1] = {std::cos(phi), std::sin(phi)};
        state.masses[i + 1] = eps * mus[i];
        phi += thetas[i];
    }

    Vec2 com{0.0, 0.0};
    double total = 0.0;
    for (int i = 0; i < 5; ++i) {
        com = com + state.masses[i] * state.positions[i];
        total += state.masses[i];
    }
    com = (1.0 / total) * com;
    for (auto& q : state.positions) q = q - com;
    return state;
}

double potential(const FullBodyState& state) {
    double v = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const double r = norm(state.positions[i] - state.positions[j]);
            v += state.masses[i] * state.masses[j] / r;
        }
    return v;
}

std::array<Vec2, 5> potential_gradient(const FullBodyState& state) {
    std::array<Vec2, 5> grad{};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const Vec2 d = state.positions[j] - state.positions[i];
            const double r = norm(d);
            if (r < 1e-9)
                throw std::domain_error("potential_gradient: bodies nearly collide");
            const double w = state.masses[i] * state.masses[j] / (r * r * r);
            grad[i] = grad[i] + w * d; // attraction toward body j
            grad[j] = grad[j] - w * d;
        }
    return grad;
}

CCFitReport cc_fit(const FullBodyState& state) {
    const std::array<Vec2, 5> grad = potential_gradient(state);
    std::array<Vec2, 5> accel;
    for (int i = 0; i < 5; ++i) accel[i] = (1.0 / state.masses[i]) * grad[i];

    double aq = 0.0, qq = 0.0;
    for (int i = 0; i < 5; ++i) {
        aq += dot(accel[i], state.positions[i]);
        qq += dot(state.positions[i], state.positions[i]);
    }
    const double lambda = aq / qq;

    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
        worst = std::fmax(worst, norm(accel[i] - lambda * state.positions[i]));
    return {lambda, worst, state.epsilon};
}

ScalingReport epsilon_scaling_check(const std::array<double, 4>& thetas,
                                    const std::array<double, 4>& mus,
                                    const std::vector<double>& eps_list) {
    if (eps_list.size() < 3)
        throw std::invalid_argument("epsilon_scaling_check: need >= 3 epsilons");
    for (size_t k = 0; k < eps_list.size(); ++k) {
        if (!(eps_list[k] > 0.0))
            throw std::invalid_argument("epsilon_scaling_check: epsilons must be positive");
        if (k > 0 && !(eps_list[k] < eps_list[k - 1]))
            throw std::invalid_argument("epsilon_scaling_check: epsilons must decrease");
    }
    if (!(eps_list.front() / eps_list.back() >= 99.999))
        throw std::invalid_argument(
            "epsilon_scaling_check: epsilons must span at least two decades");

    ScalingReport report;
    std::vector<double> log_eps, log_res;
    for (double eps : eps_list) {
        const CCFitReport fit = cc_fit(embed_positions(thetas, mus, eps));
        report.points.push_back(fit);
        log_eps.push_back(std::log(eps));
        // exactly central embeddings bottom out at rounding noise; clamp so
        // the fit stays finite
        log_res.push_back(std::log(std::fmax(fit.residual_norm, 1e-300)));
    }
    report.slope = linalg::ols_slope(log_eps, log_res);
    return report;
}

} // namespace coorbital::newtonian
