// coorbital: solver / verifier CLI for coorbital central configurations.
// Exit codes: 0 success, 1 invalid input, 2 numerical non-convergence.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coorbital/bifurcation.hpp"
#include "coorbital/coorbital_system.hpp"
#include "coorbital/kernel.hpp"
#include "coorbital/newtonian.hpp"
#include "coorbital/opposite.hpp"
#include "coorbital/root_find.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

struct AngleUnit {
    bool degrees = false;
    double in(double v) const { return degrees ? v * kPi / 180.0 : v; }
    double out(double v) const { return degrees ? v * 180.0 / kPi : v; }
};

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

coorbital::opposite::OppositeParams parse_params(const std::vector<double>& mu,
                                                 const std::vector<double>& ratios) {
    if (mu.empty() == ratios.empty())
        throw std::invalid_argument(
            "exactly one of --mu and --ratios is required");
    if (!mu.empty()) {
        if (mu.size() != 4)
            throw std::invalid_argument("--mu: expected 4 comma-separated masses");
        for (double m : mu)
            if (!(m > 0.0))
                throw std::invalid_argument("--mu: masses must be positive");
        const double scale = std::max({1.0, std::fabs(mu[1]), std::fabs(mu[3])});
        if (std::fabs(mu[1] - mu[3]) > 1e-12 * scale)
            throw std::invalid_argument(
                "--mu: the opposite pair requires mu2 == mu4 (within 1e-12)");
        return {mu[1] / mu[0], mu[2] / mu[0]};
    }
    if (ratios.size() != 2)
        throw std::invalid_argument("--ratios: expected a2,a3");
    if (!(ratios[0] > 0.0) || !(ratios[1] > 0.0))
        throw std::invalid_argument("--ratios: ratios must be positive");
    return {ratios[0], ratios[1]};
}

json solution_json(const coorbital::opposite::OppositeParams& params,
                   const coorbital::opposite::SolutionSet& sol,
                   const AngleUnit& unit) {
    json j;
    j["params"] = {{"a2", params.a2}, {"a3", params.a3}};
    json roots = json::array();
    for (double r : sol.roots) roots.push_back(unit.out(r));
    j["roots"] = roots;
    j["root_count"] = sol.roots.size();
    json classes = json::array();
    for (const auto& c : sol.classes) {
        const char* kind = c.kind == coorbital::opposite::ConfigClass::square
                               ? "square"
                               : c.kind == coorbital::opposite::ConfigClass::kite
                                     ? "kite"
                                     : "generic";
        classes.push_back({{"kind", kind}, {"theta1", unit.out(c.theta1)}});
    }
    j["classes"] = classes;
    j["class_count"] = sol.class_count;
    j["tangency"] = sol.tangency;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{
        "coorbital: central configurations of the planar 1+4 problem with a "
        "diametrically opposite satellite pair"};
    app.require_subcommand(1);
    AngleUnit unit;
    app.add_flag("--degrees", unit.degrees,
                 "angles in degrees on the command line and in JSON output "
                 "(CSV files always use radians)");

    // eval-f
    auto* cmd_eval = app.add_subcommand("eval-f", "kernel value and derivatives");
    double eval_x = 0.0;
    cmd_eval->add_option("--x", eval_x, "evaluation point in (0, 2*pi)")
        ->required();

    // solve / count
    std::vector<double> opt_mu, opt_ratios;
    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--mu", opt_mu,
                        "masses mu1,mu2,mu3,mu4 (mu2 must equal mu4)")
            ->delimiter(',')
            ->expected(0, 4);
        cmd->add_option("--ratios", opt_ratios, "mass ratios a2,a3")
            ->delimiter(',')
            ->expected(0, 2);
    };
    auto* cmd_solve = app.add_subcommand("solve", "all opposite-pair solutions");
    add_param_opts(cmd_solve);
    bool solve_check = false;
    cmd_solve->add_flag("--check", solve_check,
                        "cross-validate the root count against a brute-force "
                        "grid scan");
    auto* cmd_count = app.add_subcommand("count", "number of solution classes");
    add_param_opts(cmd_count);

    // sweep
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "classify a range of ratios (CSV table, JSON summary)");
    double a_min = 0.0, a_max = 0.0;
    int steps = 0;
    double a2_min = 0.0, a2_max = 0.0, a3_min = 0.0, a3_max = 0.0;
    int a2_steps = 0, a3_steps = 0;
    std::string out_path;
    cmd_sweep->add_option("--a-min", a_min, "symmetric-slice sweep: first ratio");
    cmd_sweep->add_option("--a-max", a_max, "symmetric-slice sweep: last ratio");
    cmd_sweep->add_option("--steps", steps, "symmetric-slice sweep: row count");
    cmd_sweep->add_option("--a2-min", a2_min, "parameter-grid sweep: first a2");
    cmd_sweep->add_option("--a2-max", a2_max, "parameter-grid sweep: last a2");
    cmd_sweep->add_option("--a2-steps", a2_steps, "parameter-grid sweep: a2 rows");
    cmd_sweep->add_option("--a3-min", a3_min, "parameter-grid sweep: first a3");
    cmd_sweep->add_option("--a3-max", a3_max, "parameter-grid sweep: last a3");
    cmd_sweep->add_option("--a3-steps", a3_steps, "parameter-grid sweep: a3 rows");
    cmd_sweep->add_option("--out", out_path, "CSV output path");

    // masses
    auto* cmd_masses =
        app.add_subcommand("masses", "mass nullspace of a gap vector");
    std::vector<double> masses_theta;
    cmd_masses->add_option("--theta", masses_theta, "gaps t1,...,tn (n >= 3)")
        ->delimiter(',')
        ->required();

    // audit
    auto* cmd_audit = app.add_subcommand("audit", "numerical impossibility audits");
    int audit_theorem = 0;
    int audit_grid = 200;
    cmd_audit
        ->add_option("--theorem", audit_theorem,
                     "1: adjacent-pair collinear scan, 2: opposite-pair "
                     "symmetry audit")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    cmd_audit->add_option("--grid", audit_grid,
                          "grid steps (--theorem 1) or sample count (--theorem 2)");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "embed at finite eps and check residual scaling");
    std::vector<double> verify_theta, verify_mu, verify_eps{1e-2, 1e-3, 1e-4};
    cmd_verify->add_option("--theta", verify_theta, "gaps t1,t2,t3,t4")
        ->delimiter(',')
        ->required();
    cmd_verify->add_option("--mu", verify_mu, "masses mu1,mu2,mu3,mu4")
        ->delimiter(',')
        ->required();
    cmd_verify->add_option("--eps", verify_eps,
                           "decreasing epsilon list (default 1e-2,1e-3,1e-4)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (cmd_eval->parsed()) {
        const double x = unit.in(eval_x);
        const coorbital::KernelEval k = coorbital::eval_f_derivatives(x);
        emit(json{{"x", unit.out(x)},
                  {"f", k.f},
                  {"f1", k.f1},
                  {"f2", k.f2},
                  {"f3", k.f3}});
        return 0;
    }

    if (cmd_solve->parsed() || cmd_count->parsed()) {
        const auto params = parse_params(opt_mu, opt_ratios);
        const auto sol = coorbital::opposite::solve_opposite(params);
        if (cmd_count->parsed()) {
            emit(json{{"params", {{"a2", params.a2}, {"a3", params.a3}}},
                      {"root_count", sol.roots.size()},
                      {"class_count", sol.class_count}});
            return 0;
        }
        json j = solution_json(params, sol, unit);
        if (solve_check) {
            const auto scan = coorbital::opposite::grid_scan_roots(params, 20000);
            j["check"] = {{"grid_points", 20000},
                          {"grid_root_count", scan.size()},
                          {"match", scan.size() == sol.roots.size()}};
            emit(j);
            if (scan.size() != sol.roots.size()) {
                std::cerr << "solve --check: cascade and grid scan disagree\n";
                return 2;
            }
            return 0;
        }
        emit(j);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        const bool grid_mode = cmd_sweep->count("--a2-min") > 0;
        std::ofstream csv;
        if (!out_path.empty()) {
            csv.open(out_path);
            if (!csv)
                throw std::invalid_argument("--out: cannot open " + out_path);
        }
        if (grid_mode) {
            if (a2_steps < 2 || a3_steps < 2)
                throw std::invalid_argument(
                    "--a2-steps/--a3-steps: need at least 2 each");
            if (!(a2_min > 0.0 && a2_max > a2_min) ||
                !(a3_min > 0.0 && a3_max > a3_min))
                throw std::invalid_argument(
                    "--a2-min/--a2-max/--a3-min/--a3-max: need 0 < min < max");
            json rows = json::array();
            if (csv.is_open())
                csv << "a2,a3,root_count,class_count,root1,root2,root3\n";
            for (int i = 0; i < a2_steps; ++i) {
                const double a2 = a2_min + (a2_max - a2_min) * i / (a2_steps - 1);
                for (int j = 0; j < a3_steps; ++j) {
                    const double a3 =
                        a3_min + (a3_max - a3_min) * j / (a3_steps - 1);
                    const auto sol =
                        coorbital::opposite::solve_opposite({a2, a3});
                    json row{{"a2", a2},
                             {"a3", a3},
                             {"root_count", sol.roots.size()},
                             {"class_count", sol.class_count}};
                    json roots = json::array();
                    for (double r : sol.roots) roots.push_back(unit.out(r));
                    row["roots"] = roots;
                    rows.push_back(row);
                    if (csv.is_open()) {
                        csv << fmt15(a2) << ',' << fmt15(a3) << ','
                            << sol.roots.size() << ',' << sol.class_count;
                        for (size_t k = 0; k < 3; ++k)
                            csv << ','
                                << (k < sol.roots.size() ? fmt15(sol.roots[k])
                                                         : std::string{});
                        csv << '\n';
                    }
                }
            }
            json j{{"a2_min", a2_min}, {"a2_max", a2_max}, {"a2_steps", a2_steps},
                   {"a3_min", a3_min}, {"a3_max", a3_max}, {"a3_steps", a3_steps},
                   {"rows", rows}};
            if (!out_path.empty()) j["csv"] = out_path;
            emit(j);
            return 0;
        }
        if (cmd_sweep->count("--a-min") == 0 || cmd_sweep->count("--a-max") == 0 ||
            cmd_sweep->count("--steps") == 0)
            throw std::invalid_argument(
                "sweep: --a-min/--a-max/--steps are required (or use the "
                "--a2-*/--a3-* grid form)");
        const auto rows = coorbital::bifurcation::sweep(a_min, a_max, steps);
        if (csv.is_open()) csv << "a,regime,kite_theta1\n";
        json jrows = json::array();
        for (const auto& row : rows) {
            json r{{"a", row.a},
                   {"regime", coorbital::bifurcation::regime_name(row.regime)}};
            if (row.kite_theta1) r["kite_theta1"] = unit.out(*row.kite_theta1);
            jrows.push_back(r);
            if (csv.is_open()) {
                csv << fmt15(row.a) << ','
                    << coorbital::bifurcation::regime_name(row.regime) << ','
                    << (row.kite_theta1 ? fmt15(*row.kite_theta1) : std::string{})
                    << '\n';
            }
        }
        json j{{"a_min", a_min}, {"a_max", a_max}, {"steps", steps},
               {"rows", jrows}};
        if (!out_path.empty()) j["csv"] = out_path;
        emit(j);
        return 0;
    }

    if (cmd_masses->parsed()) {
        std::vector<double> gaps;
        for (double t : masses_theta) gaps.push_back(unit.in(t));
        const coorbital::AngleConfig config(gaps);
        const auto ns = coorbital::solve_masses(config);
        const auto positive = coorbital::linalg::find_positive_vector(ns.basis, 1e-8);
        json thetas = json::array();
        for (double t : config.thetas()) thetas.push_back(unit.out(t));
        json basis = json::array();
        for (const auto& v : ns.basis) basis.push_back(v);
        json j{{"thetas", thetas},
               {"dimension", ns.dimension},
               {"basis", basis},
               {"positive_feasible", positive.found}};
        if (positive.found) j["positive_example"] = positive.vec;
        emit(j);
        return 0;
    }

    if (cmd_audit->parsed()) {
        if (audit_grid < 100)
            throw std::invalid_argument("--grid: must be at least 100");
        if (audit_theorem == 1) {
            const auto rep = coorbital::opposite::audit_theorem1(audit_grid);
            emit(json{{"theorem", 1},
                      {"grid_steps", rep.grid_steps},
                      {"points_checked", rep.points_checked},
                      {"counterexample_found", rep.counterexample_found},
                      {"min_feasible_residual", rep.min_feasible_residual}});
            return 0;
        }
        const auto rep = coorbital::opposite::audit_theorem2(audit_grid);
        emit(json{{"theorem", 2},
                  {"samples", rep.samples},
                  {"p_min", rep.p_min},
                  {"asymmetric_positive_found", rep.asymmetric_positive_found},
                  {"passed", rep.passed}});
        return 0;
    }

    if (cmd_verify->parsed()) {
        if (verify_theta.size() != 4)
            throw std::invalid_argument("--theta: expected 4 gaps");
        if (verify_mu.size() != 4)
            throw std::invalid_argument("--mu: expected 4 masses");
        std::array<double, 4> thetas{}, mus{};
        for (int i = 0; i < 4; ++i) {
            thetas[i] = unit.in(verify_theta[i]);
            mus[i] = verify_mu[i];
        }
        const auto rep =
            coorbital::newtonian::epsilon_scaling_check(thetas, mus, verify_eps);
        json jt = json::array(), points = json::array();
        for (double t : thetas) jt.push_back(unit.out(t));
        for (const auto& p : rep.points)
            points.push_back({{"epsilon", p.epsilon},
                              {"lambda_fit", p.lambda_fit},
                              {"residual_norm", p.residual_norm}});
        emit(json{{"thetas", jt},
                  {"mus", verify_mu},
                  {"slope", rep.slope},
                  {"points", points}});
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const coorbital::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
