#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bvplab/energy.hpp"
#include "bvplab/hypotheses.hpp"
#include "bvplab/nonlinearity.hpp"
#include "bvplab/report_io.hpp"
#include "bvplab/shooting.hpp"
#include "bvplab/variational.hpp"

namespace bvplab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LambdaRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;  // number of equispaced samples, endpoints included
};

/// One resolved run: command, problem data, mesh, seeds, tolerances, output
/// directory. Every report embeds the resolved form so a run can be
/// reproduced from its own output.
struct RunConfig {
  std::string command = "solve";  // check | interval | solve | sweep | oracle
  std::string f_spec = "logistic";
  std::string alpha_spec = "constant";
  double r = 0.01;
  int n = 511;
  double a = 1.0;  // hypothesis scan bound
  std::optional<double> lambda;
  std::optional<LambdaRange> lambda_range;
  std::uint64_t seed = 12345;
  std::string out_dir = "out";
  bool skip_hypotheses = false;
  double quad_tol = 1e-12;
  double check_tol = 1e-9;
  int sweep_rk_steps = 2000;
  SolverOptions solver{};
  ShootOptions shoot{};
};

// ---------------------------------------------------------------------------
// Family / weight spec parsing:  FAMILY[:PARAMS]
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": cannot parse number '" + s + "'");
  }
}

/// Knot list "x,y:x,y:..." starting after the family name.
inline std::pair<std::vector<double>, std::vector<double>> parse_knots(
    const std::vector<std::string>& parts, const std::string& what) {
  std::vector<double> xs, ys;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::vector<std::string> xy = split(parts[k], ',');
    if (xy.size() != 2) throw ConfigError(what + ": knot '" + parts[k] + "' is not 'x,y'");
    xs.push_back(parse_number(xy[0], what));
    ys.push_back(parse_number(xy[1], what));
  }
  return {std::move(xs), std::move(ys)};
}

}  // namespace detail

inline Nonlinearity parse_nonlinearity(const std::string& spec) {
  const std::vector<std::string> parts = detail::split(spec, ':');
  const std::string& family = parts[0];
  try {
    if (family == "linear") {
      const double c = parts.size() > 1 ? detail::parse_number(parts[1], "linear") : 1.0;
      return Nonlinearity::linear(c);
    }
    if (family == "logistic") return Nonlinearity::logistic();
    if (family == "cubic_cap") return Nonlinearity::cubic_cap();
    if (family == "tabulated") {
      auto [xs, ys] = detail::parse_knots(parts, "tabulated");
      return Nonlinearity::tabulated(xs, ys);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("nonlinearity spec '" + spec + "': " + e.what());
  }
  throw ConfigError("unknown nonlinearity family '" + family +
                    "' (expected linear | logistic | cubic_cap | tabulated)");
}

inline Weight parse_weight(const std::string& spec) {
  const std::vector<std::string> parts = detail::split(spec, ':');
  const std::string& family = parts[0];
  try {
    if (family == "constant") {
      const double v = parts.size() > 1 ? detail::parse_number(parts[1], "constant") : 1.0;
      return Weight::constant(v);
    }
    if (family == "tabulated") {
      auto [ts, vs] = detail::parse_knots(parts, "weight tabulated");
      return Weight::tabulated(ts, vs);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("weight spec '" + spec + "': " + e.what());
  }
  throw ConfigError("unknown weight family '" + family + "' (expected constant | tabulated)");
}

// ---------------------------------------------------------------------------
// Config <-> JSON
// ---------------------------------------------------------------------------

inline nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["command"] = cfg.command;
  j["f"] = cfg.f_spec;
  j["alpha"] = cfg.alpha_spec;
  j["r"] = cfg.r;
  j["n"] = cfg.n;
  j["a"] = cfg.a;
  if (cfg.lambda) j["lambda"] = *cfg.lambda;
  if (cfg.lambda_range) {
    j["lambda_range"] = {{"lo", cfg.lambda_range->lo},
                         {"hi", cfg.lambda_range->hi},
                         {"count", cfg.lambda_range->count}};
  }
  j["seed"] = cfg.seed;
  j["out"] = cfg.out_dir;
  j["skip_hypotheses"] = cfg.skip_hypotheses;
  j["tolerances"] = {{"quad_tol", cfg.quad_tol},
                     {"check_tol", cfg.check_tol},
                     {"gap_tol", cfg.solver.gap_tol},
                     {"fp_tol", cfg.solver.fp_tol},
                     {"eps_edge", cfg.solver.eps_edge},
                     {"zero_tol_scale", cfg.solver.zero_tol_scale},
                     {"pos_tol", cfg.solver.pos_tol},
                     {"shoot_prop_tol", cfg.shoot.prop_tol},
                     {"shoot_kappa_tol", cfg.shoot.kappa_tol}};
  j["solver"] = {{"restarts", cfg.solver.restarts},
                 {"rho_grid", cfg.solver.rho_grid},
                 {"rho_min_factor", cfg.solver.rho_min_factor},
                 {"eta_samples", cfg.solver.eta_sample_count},
                 {"solve_count", cfg.solver.solve_count},
                 {"fp_theta", cfg.solver.fp_theta},
                 {"fp_max_iter", cfg.solver.fp_max_iter}};
  j["oracle"] = {{"rk_steps", cfg.shoot.rk_steps},
                 {"sweep_rk_steps", cfg.sweep_rk_steps},
                 {"ladder_rungs", cfg.shoot.ladder_rungs}};
  return j;
}

/// Reads a config from JSON. Accepts either a bare config object or any
/// emitted report (which embeds the resolved config under "config"), so
/// `--config report.json` reproduces the run that wrote the report.
inline RunConfig config_from_json(const nlohmann::json& root) {
  const nlohmann::json& j =
      (root.contains("config") && root["config"].is_object()) ? root["config"] : root;
  RunConfig cfg;
  try {
    if (j.contains("command")) cfg.command = j["command"].get<std::string>();
    if (j.contains("f")) cfg.f_spec = j["f"].get<std::string>();
    if (j.contains("alpha")) cfg.alpha_spec = j["alpha"].get<std::string>();
    if (j.contains("r")) cfg.r = j["r"].get<double>();
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("a")) cfg.a = j["a"].get<double>();
    if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
    if (j.contains("lambda_range")) {
      const nlohmann::json& lr = j["lambda_range"];
      cfg.lambda_range = LambdaRange{lr["lo"].get<double>(), lr["hi"].get<double>(),
                                     lr["count"].get<int>()};
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    if (j.contains("skip_hypotheses")) cfg.skip_hypotheses = j["skip_hypotheses"].get<bool>();
    if (j.contains("tolerances")) {
      const nlohmann::json& t = j["tolerances"];
      if (t.contains("quad_tol")) cfg.quad_tol = t["quad_tol"].get<double>();
      if (t.contains("check_tol")) cfg.check_tol = t["check_tol"].get<double>();
      if (t.contains("gap_tol")) cfg.solver.gap_tol = t["gap_tol"].get<double>();
      if (t.contains("fp_tol")) cfg.solver.fp_tol = t["fp_tol"].get<double>();
      if (t.contains("eps_edge")) cfg.solver.eps_edge = t["eps_edge"].get<double>();
      if (t.contains("zero_tol_scale"))
        cfg.solver.zero_tol_scale = t["zero_tol_scale"].get<double>();
      if (t.contains("pos_tol")) cfg.solver.pos_tol = t["pos_tol"].get<double>();
      if (t.contains("shoot_prop_tol")) cfg.shoot.prop_tol = t["shoot_prop_tol"].get<double>();
      if (t.contains("shoot_kappa_tol")) cfg.shoot.kappa_tol = t["shoot_kappa_tol"].get<double>();
    }
    if (j.contains("solver")) {
      const nlohmann::json& s = j["solver"];
      if (s.contains("restarts")) cfg.solver.restarts = s["restarts"].get<int>();
      if (s.contains("rho_grid")) cfg.solver.rho_grid = s["rho_grid"].get<int>();
      if (s.contains("rho_min_factor"))
        cfg.solver.rho_min_factor = s["rho_min_factor"].get<double>();
      if (s.contains("eta_samples")) cfg.solver.eta_sample_count = s["eta_samples"].get<int>();
      if (s.contains("solve_count")) cfg.solver.solve_count = s["solve_count"].get<int>();
      if (s.contains("fp_theta")) cfg.solver.fp_theta = s["fp_theta"].get<double>();
      if (s.contains("fp_max_iter")) cfg.solver.fp_max_iter = s["fp_max_iter"].get<int>();
    }
    if (j.contains("oracle")) {
      const nlohmann::json& o = j["oracle"];
      if (o.contains("rk_steps")) cfg.shoot.rk_steps = o["rk_steps"].get<int>();
      if (o.contains("sweep_rk_steps")) cfg.sweep_rk_steps = o["sweep_rk_steps"].get<int>();
      if (o.contains("ladder_rungs")) cfg.shoot.ladder_rungs = o["ladder_rungs"].get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  return cfg;
}

inline RunConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(root);
}

inline void validate(const RunConfig& cfg) {
  static const std::vector<std::string> commands{"check", "interval", "solve", "sweep", "oracle"};
  bool known = false;
  for (const std::string& c : commands) known = known || c == cfg.command;
  if (!known) throw ConfigError("unknown command '" + cfg.command + "'");
  if (!(cfg.r > 0.0)) throw ConfigError("r must be positive");
  if (cfg.n < 16) throw ConfigError("n must be at least 16");
  if (!(cfg.a > 0.0)) throw ConfigError("a must be positive");
  if (cfg.lambda_range) {
    if (!(cfg.lambda_range->lo < cfg.lambda_range->hi))
      throw ConfigError("lambda_range: need lo < hi");
    if (cfg.lambda_range->count < 2) throw ConfigError("lambda_range: need count >= 2");
  }
  if (cfg.lambda && !(*cfg.lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (cfg.solver.restarts < 1) throw ConfigError("solver.restarts must be >= 1");
  if (cfg.solver.eta_sample_count < 2) throw ConfigError("solver.eta_samples must be >= 2");
  if (cfg.shoot.rk_steps < 100 || cfg.sweep_rk_steps < 100)
    throw ConfigError("RK step counts must be >= 100");
  if (!(cfg.quad_tol > 0.0) || !(cfg.check_tol > 0.0)) throw ConfigError("tolerances must be positive");
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

namespace detail {

inline double effective_linear_coefficient(const Nonlinearity& f) {
  // Coefficient c of the linearization f(xi) ~ c xi at 0, used by the
  // spectrum oracle: closed form when the family provides derivatives.
  const std::optional<std::vector<double>> d = f.derivatives_at_zero(1);
  if (!d || d->empty()) throw ConfigError("spectrum oracle needs a family with f'(0) available");
  if (!((*d)[0] > 0.0)) throw ConfigError("spectrum oracle needs f'(0) > 0");
  return (*d)[0];
}

inline std::vector<double> lambda_grid_of(const LambdaRange& lr) {
  std::vector<double> grid(static_cast<std::size_t>(lr.count));
  for (int k = 0; k < lr.count; ++k) {
    grid[static_cast<std::size_t>(k)] = lr.lo + (lr.hi - lr.lo) * k / (lr.count - 1);
  }
  return grid;
}

}  // namespace detail

/// Executes the configured command, writing all artifacts under cfg.out_dir.
/// Exit codes: 0 verdict computed, 1 hypothesis violation, 2 numerical
/// non-convergence, 3 config error. Every nonzero exit leaves an "error"
/// object in report.json (and config errors echo it on stderr from main).
inline int run(const RunConfig& cfg) {
  const std::filesystem::path out(cfg.out_dir);
  nlohmann::json report;
  report["config"] = config_to_json(cfg);

  const auto fail = [&](int code, const std::string& kind, const std::string& message) {
    report["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
    write_json(out / "report.json", report);
    return code;
  };

  Nonlinearity f = Nonlinearity::logistic();
  Weight alpha = Weight::constant(1.0);
  try {
    validate(cfg);
    f = parse_nonlinearity(cfg.f_spec);
    alpha = parse_weight(cfg.alpha_spec);
  } catch (const ConfigError& e) {
    return fail(3, "config", e.what());
  }
  report["family"] = f.describe();
  report["weight"] = alpha.describe();

  SolverOptions solver = cfg.solver;
  solver.seed = cfg.seed;

  try {
    if (cfg.command == "check") {
      const double bound = std::min(cfg.a, f.xi_max());
      const HypothesisReport rep = hypothesis_report(f, bound, cfg.check_tol, cfg.quad_tol);
      report["check"] = to_json(rep);
      const std::optional<std::vector<double>> derivs = f.derivatives_at_zero(6);
      if (derivs) {
        const std::optional<int> k = certify_decrease_from_derivatives(*derivs);
        report["check"]["derivative_certificate_order"] = k ? nlohmann::json(*k) : nlohmann::json();
      }
      const bool ok = rep.nonincreasing && rep.nonconstant_on_all_prefixes;
      if (!ok) return fail(1, "hypothesis", "F(xi)/xi^2 is not strictly decreasing on (0, a]");
      write_json(out / "report.json", report);
      return 0;
    }

    if (cfg.command == "interval") {
      const Grid grid(cfg.n);
      const EnergyContext ctx(grid, f, alpha, cfg.quad_tol);
      const VariationalEstimates est = compute_estimates(ctx, cfg.r, solver);
      report["estimates"] = to_json(est);
      write_eta_csv(out / "eta.csv", est.eta_samples);
      write_grid_function_csv(out / "solutions" / "maximizer.csv", est.u_hat);
      if (est.confidence_degraded)
        return fail(2, "convergence", "an ascent run exhausted its iteration budget");
      write_json(out / "report.json", report);
      return 0;
    }

    if (cfg.command == "solve") {
      if (!cfg.skip_hypotheses && cfg.r > cfg.a * cfg.a)
        return fail(3, "config", "need r <= a^2 (or --skip-hypotheses) for a hypothesis-driven run");
      const Grid grid(cfg.n);
      const EnergyContext ctx(grid, f, alpha, cfg.quad_tol);
      CharacterizationReport rep = characterize(ctx, cfg.r, cfg.a, solver, !cfg.skip_hypotheses);
      if (rep.hypotheses_checked && !rep.ratio_decreasing) {
        report["characterization"] = to_json(rep);
        write_eta_csv(out / "eta.csv", rep.estimates.eta_samples);
        return fail(1, "hypothesis", "F(xi)/xi^2 is not strictly decreasing on (0, a]");
      }

      // One extra sample at an explicitly requested multiplier.
      if (cfg.lambda) {
        rep.solutions.push_back(
            fixed_point_solve(ctx, *cfg.lambda, rep.estimates.u_hat, cfg.r, solver));
      }

      // Independent cross-check of every converged solution's energy.
      for (SolutionReport& s : rep.solutions) {
        if (s.status != FixedPointStatus::Converged) continue;
        const ShootOutcome oracle = auto_shoot(f, alpha, s.lambda, cfg.r, cfg.shoot);
        if (oracle.solution) {
          s.oracle_delta =
              std::abs(s.energy - oracle.solution->energy) / oracle.solution->energy;
        }
      }

      report["characterization"] = to_json(rep);
      write_eta_csv(out / "eta.csv", rep.estimates.eta_samples);
      write_solutions_csv(out / "solutions" / "summary.csv", rep.solutions);
      write_grid_function_csv(out / "solutions" / "maximizer.csv", rep.estimates.u_hat);
      for (std::size_t k = 0; k < rep.solutions.size(); ++k) {
        write_grid_function_csv(out / "solutions" / ("solution_" + std::to_string(k + 1) + ".csv"),
                                rep.solutions[k].u);
      }
      bool nonconverged = rep.estimates.confidence_degraded;
      for (const SolutionReport& s : rep.solutions) {
        nonconverged = nonconverged || s.status == FixedPointStatus::NotConverged ||
                       s.status == FixedPointStatus::Diverged;
      }
      if (nonconverged) return fail(2, "convergence", "a solve did not converge; see report");
      write_json(out / "report.json", report);
      return 0;
    }

    if (cfg.command == "sweep") {
      if (!cfg.lambda_range) return fail(3, "config", "sweep needs --lambda-range LO:HI:K");
      ShootOptions sweep_opt = cfg.shoot;
      sweep_opt.rk_steps = cfg.sweep_rk_steps;
      const std::vector<double> grid = detail::lambda_grid_of(*cfg.lambda_range);
      const std::vector<SweepRow> rows = lambda_sweep(f, alpha, grid, cfg.r, sweep_opt);
      write_sweep_csv(out / "sweep.csv", rows);
      int successes = 0;
      double first = 0.0, last = 0.0;
      for (const SweepRow& row : rows) {
        if (!row.success) continue;
        if (successes == 0) first = row.lambda;
        last = row.lambda;
        ++successes;
      }
      report["sweep"] = {{"points", rows.size()},
                         {"successes", successes},
                         {"success_fraction", static_cast<double>(successes) /
                                                  static_cast<double>(rows.size())}};
      if (successes > 0) {
        report["sweep"]["first_success_lambda"] = first;
        report["sweep"]["last_success_lambda"] = last;
      }
      write_json(out / "report.json", report);
      return 0;
    }

    // oracle: eigen_scan over a range, or a single-multiplier shot.
    if (cfg.lambda_range) {
      const double c = detail::effective_linear_coefficient(f);
      const std::vector<double> eigs =
          eigen_scan(c, alpha, cfg.lambda_range->lo, cfg.lambda_range->hi,
                     cfg.lambda_range->count, cfg.shoot.rk_steps);
      report["oracle"] = {{"mode", "eigen_scan"}, {"c", c}, {"eigenvalues", eigs}};
      write_json(out / "report.json", report);
      return 0;
    }
    if (cfg.lambda) {
      const ShootOutcome outcome = auto_shoot(f, alpha, *cfg.lambda, cfg.r, cfg.shoot);
      nlohmann::json j{{"mode", "shoot"}, {"lambda", *cfg.lambda}, {"status", outcome.status}};
      if (outcome.solution) {
        j["slope"] = outcome.solution->slope;
        j["energy"] = outcome.solution->energy;
        j["boundary_miss"] = outcome.solution->boundary_miss;
        const Trajectory& traj = outcome.solution->trajectory;
        std::ofstream tout = detail::open_out(out / "trajectory.csv");
        tout << "t,u,du\n";
        for (std::size_t k = 0; k < traj.t.size(); ++k) {
          tout << fmt17(traj.t[k]) << ',' << fmt17(traj.u[k]) << ',' << fmt17(traj.v[k]) << '\n';
        }
      }
      report["oracle"] = std::move(j);
      write_json(out / "report.json", report);
      return 0;
    }
    return fail(3, "config", "oracle needs --lambda or --lambda-range");
  } catch (const ConfigError& e) {
    return fail(3, "config", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(3, "config", e.what());
  } catch (const std::domain_error& e) {
    return fail(1, "hypothesis", e.what());
  } catch (const std::exception& e) {
    return fail(2, "convergence", e.what());
  }
}

}  // namespace bvplab
