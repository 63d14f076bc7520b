// Command-line front door: parses flags (optionally on top of a JSON config
// file), dispatches one command, and returns the run's exit code.
//
//   bvplab --command check    --f logistic --a 1
//   bvplab --command interval --f logistic --r 0.01 --n 511
//   bvplab --command solve    --f logistic --r 0.01 --n 511 --out results
//   bvplab --command sweep    --f linear:1 --r 0.01 --lambda-range 1:50:981
//   bvplab --command oracle   --f linear:0.5 --lambda-range 0:50:1001
//
// A previously emitted report.json is itself a valid --config: every report
// embeds the resolved configuration that produced it.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bvplab/bvplab.hpp"

namespace {

bvplab::LambdaRange parse_lambda_range(const std::string& text) {
  const auto parts = bvplab::detail::split(text, ':');
  if (parts.size() != 3) throw bvplab::ConfigError("--lambda-range expects LO:HI:K");
  bvplab::LambdaRange lr;
  lr.lo = bvplab::detail::parse_number(parts[0], "lambda-range lo");
  lr.hi = bvplab::detail::parse_number(parts[1], "lambda-range hi");
  try {
    lr.count = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw bvplab::ConfigError("lambda-range count: cannot parse integer '" + parts[2] + "'");
  }
  return lr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale laboratory for small-energy positive solutions of "
               "-u'' = lambda alpha(t) f(u), u(0) = u(1) = 0"};

  std::string config_path;
  std::optional<std::string> command, f_spec, alpha_spec, out_dir, lambda_range;
  std::optional<double> r, a, lambda;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  bool skip_hypotheses = false;

  app.add_option("--config", config_path, "JSON config file (a report.json also works)");
  app.add_option("--command", command, "check | interval | solve | sweep | oracle");
  app.add_option("--f", f_spec, "nonlinearity FAMILY[:PARAMS], e.g. logistic, linear:1, "
                                "tabulated:0,0:0.5,0.25:1,1");
  app.add_option("--alpha", alpha_spec, "weight FAMILY[:PARAMS], e.g. constant:1 or "
                                        "tabulated:0,1:0.5,2:1,1");
  app.add_option("--r", r, "energy ball radius (bound on the squared norm)");
  app.add_option("--n", n, "number of interior mesh nodes");
  app.add_option("--a", a, "hypothesis scan bound on (0, a]");
  app.add_option("--lambda", lambda, "single multiplier to solve or shoot at");
  app.add_option("--lambda-range", lambda_range, "LO:HI:K equispaced multipliers");
  app.add_option("--seed", seed, "restart randomness seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--skip-hypotheses", skip_hypotheses, "skip the ratio hypothesis scan");

  CLI11_PARSE(app, argc, argv);

  bvplab::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = bvplab::config_from_file(config_path);
    if (command) cfg.command = *command;
    if (f_spec) cfg.f_spec = *f_spec;
    if (alpha_spec) cfg.alpha_spec = *alpha_spec;
    if (r) cfg.r = *r;
    if (n) cfg.n = *n;
    if (a) cfg.a = *a;
    if (lambda) cfg.lambda = *lambda;
    if (lambda_range) cfg.lambda_range = parse_lambda_range(*lambda_range);
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (skip_hypotheses) cfg.skip_hypotheses = true;
  } catch (const bvplab::ConfigError& e) {
    nlohmann::json err{{"error", {{"code", 3}, {"kind", "config"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << std::endl;
    return 3;
  }

  const int code = bvplab::run(cfg);
  if (code != 0) {
    std::cerr << "exit " << code << " (see " << cfg.out_dir << "/report.json)" << std::endl;
  }
  return code;
}
