#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bvplab/grid.hpp"
#include "bvplab/hypotheses.hpp"
#include "bvplab/shooting.hpp"
#include "bvplab/variational.hpp"

namespace bvplab {

/// Shortest exact decimal form used in every CSV cell: 17 significant digits
/// round-trip any double bit-exactly.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {
inline std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes on every platform
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// (t, u) samples including the two boundary rows, which are exactly zero.
inline void write_grid_function_csv(const std::filesystem::path& path, const GridFunction& u) {
  std::ofstream out = detail::open_out(path);
  out << "t,u\n";
  out << "0,0\n";
  for (int i = 0; i < u.n(); ++i) {
    out << fmt17(u.grid.node(i)) << ',' << fmt17(u[i]) << '\n';
  }
  out << "1,0\n";
}

inline void write_eta_csv(const std::filesystem::path& path, const std::vector<EtaSample>& samples) {
  std::ofstream out = detail::open_out(path);
  out << "s,eta\n";
  for (const EtaSample& e : samples) {
    out << fmt17(e.s) << ',' << fmt17(e.eta) << '\n';
  }
}

inline void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
  std::ofstream out = detail::open_out(path);
  out << "lambda,success,slope,energy,boundary_miss,min_interior\n";
  for (const SweepRow& row : rows) {
    out << fmt17(row.lambda) << ',' << (row.success ? 1 : 0) << ',' << fmt17(row.slope) << ','
        << fmt17(row.energy) << ',' << fmt17(row.boundary_miss) << ','
        << fmt17(row.min_interior) << '\n';
  }
}

inline std::string solution_verdict(const SolutionReport& rep) {
  if (rep.status != FixedPointStatus::Converged) return to_string(rep.status);
  if (!rep.positivity_ok) return "positivity-failed";
  if (!rep.energy_below_r) return "energy-above-r";
  return "ok";
}

inline void write_solutions_csv(const std::filesystem::path& path,
                                const std::vector<SolutionReport>& reps) {
  std::ofstream out = detail::open_out(path);
  out << "lambda,energy,residual,min_interior,verdict\n";
  for (const SolutionReport& rep : reps) {
    out << fmt17(rep.lambda) << ',' << fmt17(rep.energy) << ',' << fmt17(rep.residual) << ','
        << fmt17(rep.min_interior) << ',' << solution_verdict(rep) << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const HypothesisReport& rep) {
  nlohmann::json j;
  j["a_requested"] = rep.a_requested;
  j["a_certified"] = rep.a_certified;
  j["nonincreasing"] = rep.nonincreasing;
  j["not_constant"] = rep.nonconstant_on_all_prefixes;
  if (std::isfinite(rep.witness)) {
    j["witness"] = rep.witness;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const VariationalEstimates& est) {
  nlohmann::json j;
  j["r"] = est.r;
  j["beta_r"] = est.beta_r;
  j["delta_r"] = est.delta_r;
  j["beta_r_over_r"] = est.beta_r / est.r;
  j["delta_attained_interior"] = est.delta_attained_interior;
  j["confidence_degraded"] = est.confidence_degraded;
  j["gap_at_maximizer"] = est.gap_at_maximizer;
  j["maximizer_energy"] = norm_sq(est.u_hat);
  j["maximizer_sup"] = sup_abs(est.u_hat);
  if (est.interval) {
    j["interval"] = {{"lambda_lo", est.interval->lambda_lo},
                     {"lambda_hi", est.interval->lambda_hi}};
  } else {
    j["interval"] = "empty";
    j["empty_reason"] = est.empty_reason;
  }
  nlohmann::json samples = nlohmann::json::array();
  for (const EtaSample& e : est.eta_samples) samples.push_back({{"s", e.s}, {"eta", e.eta}});
  j["eta_samples"] = std::move(samples);
  nlohmann::json scan = nlohmann::json::array();
  for (const DeltaScanPoint& p : est.delta_scan)
    scan.push_back({{"rho_sq", p.rho_sq}, {"sup_J", p.sup_J}, {"ratio", p.ratio}});
  j["delta_scan"] = std::move(scan);
  return j;
}

inline nlohmann::json to_json(const SolutionReport& rep) {
  nlohmann::json j;
  j["lambda"] = rep.lambda;
  j["energy"] = rep.energy;
  j["residual"] = rep.residual;
  j["min_interior"] = rep.min_interior;
  j["iterations"] = rep.iterations;
  j["status"] = to_string(rep.status);
  j["positivity_ok"] = rep.positivity_ok;
  j["energy_below_r"] = rep.energy_below_r;
  j["verdict"] = solution_verdict(rep);
  if (rep.oracle_delta) j["oracle_delta"] = *rep.oracle_delta;
  return j;
}

inline nlohmann::json to_json(const CharacterizationReport& rep) {
  nlohmann::json j;
  if (rep.hypotheses_checked) {
    j["hypotheses"] = to_json(rep.hypotheses);
    j["ratio_decreasing"] = rep.ratio_decreasing;
  } else {
    j["hypotheses"] = "skipped";
  }
  j["estimates"] = to_json(rep.estimates);
  nlohmann::json sols = nlohmann::json::array();
  for (const SolutionReport& s : rep.solutions) sols.push_back(to_json(s));
  j["solutions"] = std::move(sols);
  j["verdict"] = rep.verdict;
  return j;
}

inline nlohmann::json to_json(const SweepRow& row) {
  nlohmann::json j;
  j["lambda"] = row.lambda;
  j["success"] = row.success;
  j["slope"] = row.slope;
  j["energy"] = row.energy;
  j["boundary_miss"] = row.boundary_miss;
  j["min_interior"] = row.min_interior;
  j["status"] = row.status;
  return j;
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out = detail::open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace bvplab
