// The initial-value integrator, slope shooting, the automatic bracket with
// its proportionality certificate, the linear spectrum scan, and the
// multiplier sweep.
//
// Independent references:
//   f == 0:                u(t) = slope * t exactly (RK4 is exact on it).
//   f(xi) = xi, lambda = pi^2, slope = pi:  u(t) = sin(pi t), u(1) = 0.
//   zero extension:        a negative slope never sees f, so u stays linear.
//   spectrum:              -u'' = lambda c alpha u has eigenvalues
//                          k^2 pi^2 / (c alpha) for constant alpha.
//   positive homogeneity:  for the linear family the shot map is exactly
//                          degree-1 homogeneous in the slope, certificate
//                          fires; the logistic family breaks it.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bvplab/grid.hpp"
#include "bvplab/shooting.hpp"
#include "bvplab/variational.hpp"

using namespace bvplab;

namespace {

constexpr double kPi = std::numbers::pi;

Nonlinearity zero_f() { return Nonlinearity::tabulated({0.0, 1.0}, {0.0, 0.0}); }

ShootOptions fast_shoot() {
  ShootOptions opt;
  opt.rk_steps = 2000;
  return opt;
}

}  // namespace

TEST_CASE("integrator: zero reaction gives the exact linear ray") {
  const Weight one = Weight::constant(1.0);
  const Trajectory traj = integrate(zero_f(), one, 1.0, 1.0, 100);
  REQUIRE(traj.t.size() == 101);
  for (std::size_t j = 0; j < traj.t.size(); ++j) {
    CHECK(traj.u[j] == Catch::Approx(traj.t[j]).margin(1e-14));
    CHECK(traj.v[j] == Catch::Approx(1.0).margin(1e-14));
  }
  CHECK(traj.miss() == Catch::Approx(1.0).margin(1e-14));
  CHECK(traj.energy() == Catch::Approx(1.0).margin(1e-12));
  CHECK_FALSE(traj.diverged);
}

TEST_CASE("integrator: negative slope never engages the reaction") {
  // The nonlinearity vanishes on the negative axis, so u(t) = -t exactly.
  const Weight one = Weight::constant(1.0);
  const Trajectory traj = integrate(Nonlinearity::logistic(), one, 25.0, -1.0, 200);
  CHECK(traj.miss() == Catch::Approx(-1.0).margin(1e-14));
  for (std::size_t j = 0; j < traj.t.size(); ++j) {
    CHECK(traj.u[j] == Catch::Approx(-traj.t[j]).margin(1e-14));
  }
}

TEST_CASE("integrator: resonant linear shot reproduces the sine") {
  const Weight one = Weight::constant(1.0);
  // f(xi) = xi (c = 1/2 in the 2c convention), lambda = pi^2, slope = pi.
  const Trajectory traj =
      integrate(Nonlinearity::linear(0.5), one, kPi * kPi, kPi, 10000);
  CHECK(traj.boundary_miss() <= 1e-9);
  for (std::size_t j = 0; j < traj.t.size(); j += 500) {
    CHECK(traj.u[j] == Catch::Approx(std::sin(kPi * traj.t[j])).margin(1e-10));
  }
  CHECK(traj.energy() == Catch::Approx(kPi * kPi / 2.0).margin(1e-8));

  const Grid g(31);
  const GridFunction resampled = resample_to_grid(traj, g);
  for (int i = 0; i < g.n; ++i) {
    CHECK(resampled[i] == Catch::Approx(std::sin(kPi * g.node(i))).margin(1e-5));
  }
}

TEST_CASE("integrator: fourth-order convergence of the boundary value") {
  const Weight one = Weight::constant(1.0);
  const auto miss_err = [&](int N) {
    return std::abs(integrate(Nonlinearity::linear(0.5), one, kPi * kPi, kPi, N).miss());
  };
  const double e1 = miss_err(100);
  const double e2 = miss_err(200);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("integrator: argument validation and divergence flag") {
  const Weight one = Weight::constant(1.0);
  CHECK_THROWS_AS(integrate(zero_f(), one, 0.0, 1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(integrate(zero_f(), one, -1.0, 1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(integrate(zero_f(), one, 1.0, 1.0, 50), std::invalid_argument);
  const Trajectory big = integrate(zero_f(), one, 1.0, 2e30, 100);
  CHECK(big.diverged);
  const Trajectory rest = integrate(zero_f(), one, 1.0, 0.0, 100);
  CHECK(rest.sup_abs_u() == 0.0);
}

TEST_CASE("shoot: no sign change when the reaction vanishes") {
  const Weight one = Weight::constant(1.0);
  const ShootOutcome out = shoot(zero_f(), one, 3.0, 0.1, 5.0, fast_shoot());
  CHECK_FALSE(out.solution.has_value());
  CHECK(out.status == "no-sign-change");
  CHECK_THROWS_AS(shoot(zero_f(), one, 3.0, -1.0, 5.0, fast_shoot()), std::invalid_argument);
  CHECK_THROWS_AS(shoot(zero_f(), one, 3.0, 2.0, 1.0, fast_shoot()), std::invalid_argument);
}

TEST_CASE("automatic bracket: the linear family trips the certificate") {
  const Weight one = Weight::constant(1.0);
  const Nonlinearity lin = Nonlinearity::linear(0.5);  // f(xi) = xi
  // On the spectrum the scaled miss vanishes: resonance.
  const ShootOutcome res = auto_shoot(lin, one, kPi * kPi, 0.01, fast_shoot());
  CHECK(res.status == "eigenvalue");
  CHECK_FALSE(res.solution.has_value());
  // Off the spectrum the scaled miss is a nonzero constant: no root anywhere.
  for (double lambda : {5.0, 20.0, 35.0}) {
    const ShootOutcome off = auto_shoot(lin, one, lambda, 0.01, fast_shoot());
    CHECK(off.status == "no-sign-change");
    CHECK_FALSE(off.solution.has_value());
  }
  CHECK_THROWS_AS(auto_shoot(lin, one, 1.0, -0.5, fast_shoot()), std::invalid_argument);
}

TEST_CASE("automatic bracket: logistic family yields a positive solution") {
  const Weight one = Weight::constant(1.0);
  const ShootOutcome out = auto_shoot(Nonlinearity::logistic(), one, 10.0, 0.01, fast_shoot());
  REQUIRE(out.status == "solution");
  REQUIRE(out.solution.has_value());
  const ShotSolution& sol = *out.solution;
  CHECK(sol.boundary_miss <= 1e-10);
  CHECK(sol.trajectory.min_interior() > 0.0);
  CHECK(sol.slope > 0.0);
  CHECK(sol.energy > 0.0);
}

TEST_CASE("shooting solution matches the mesh fixed point on energy and shape") {
  const int n = 255;
  const double lambda = 10.0;
  const double r = 0.01;
  const EnergyContext ctx(Grid(n), Nonlinearity::logistic(), Weight::constant(1.0));

  SolverOptions sopt;
  sopt.restarts = 4;
  const GridFunction u0 = scale_to_sphere(profile_sine(Grid(n)), 0.005);
  const SolutionReport fp = fixed_point_solve(ctx, lambda, u0, r, sopt);
  REQUIRE(fp.status == FixedPointStatus::Converged);
  CHECK(fp.energy < r);

  const ShootOutcome out =
      auto_shoot(Nonlinearity::logistic(), Weight::constant(1.0), lambda, r, fast_shoot());
  REQUIRE(out.solution.has_value());
  const ShotSolution& sol = *out.solution;

  // Independent discretizations agree on the solution's energy. Near the
  // principal eigenvalue the solution amplitude scales like
  // lambda - lambda_1, so the mesh's O(h^2) eigenvalue offset appears in the
  // energy at twice its relative size; allow that plus slack for
  // higher-order terms.
  const double h = 1.0 / (n + 1);
  const double lam1h = (2.0 - 2.0 * std::cos(kPi * h)) / (h * h);
  const double offset_bound = 2.0 * (kPi * kPi - lam1h) / (lambda - kPi * kPi);
  CHECK(std::abs(sol.energy - fp.energy) <= (1.5 * offset_bound + 1e-4) * fp.energy);
  // ...and on its profile.
  const GridFunction resampled = resample_to_grid(sol.trajectory, Grid(n));
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(resampled[i] - fp.u[i]));
  CHECK(worst <= 0.01 * sup_abs(fp.u));
}

TEST_CASE("spectrum scan: constant weight has the classical eigenvalues") {
  const Weight one = Weight::constant(1.0);
  const std::vector<double> ev = eigen_scan(1.0, one, 0.0, 50.0, 0, 2000);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == Catch::Approx(kPi * kPi).margin(1e-3));
  CHECK(ev[1] == Catch::Approx(4.0 * kPi * kPi).margin(1e-3));

  // Doubling c halves every eigenvalue.
  const std::vector<double> ev2 = eigen_scan(2.0, one, 0.0, 25.0, 0, 2000);
  REQUIRE(ev2.size() == 2);
  CHECK(ev2[0] == Catch::Approx(kPi * kPi / 2.0).margin(1e-3));
  CHECK(ev2[1] == Catch::Approx(2.0 * kPi * kPi).margin(1e-3));

  // A constant weight folds into c the same way.
  const std::vector<double> ev4 = eigen_scan(1.0, Weight::constant(4.0), 0.0, 12.0, 0, 2000);
  REQUIRE(ev4.size() == 2);
  CHECK(ev4[0] == Catch::Approx(kPi * kPi / 4.0).margin(1e-3));
  CHECK(ev4[1] == Catch::Approx(kPi * kPi).margin(1e-3));

  CHECK(eigen_scan(1.0, one, 0.1, 9.0, 0, 2000).empty());
  CHECK_THROWS_AS(eigen_scan(0.0, one, 0.0, 50.0), std::invalid_argument);
  CHECK_THROWS_AS(eigen_scan(1.0, one, 5.0, 5.0), std::invalid_argument);
}

TEST_CASE("multiplier interval avoids the linearized spectrum") {
  const int n = 63;
  const EnergyContext ctx(Grid(n), Nonlinearity::logistic(), Weight::constant(1.0));
  SolverOptions opt;
  opt.restarts = 8;
  opt.rho_grid = 32;
  opt.eta_sample_count = 8;
  const VariationalEstimates est = compute_estimates(ctx, 0.01, opt);
  REQUIRE(est.interval.has_value());

  // The logistic linearization at zero has slope 1, so the relevant spectrum
  // is pi^2, 4 pi^2, ... The certified interval must contain none of it.
  const std::vector<double> ev =
      eigen_scan(1.0, Weight::constant(1.0), 0.5 * est.interval->lambda_lo,
                 3.0 * est.interval->lambda_hi, 0, 2000);
  for (double e : ev) {
    CHECK((e < est.interval->lambda_lo || e > est.interval->lambda_hi));
  }
  // And the nearest higher eigenvalue keeps a wide margin.
  CHECK(4.0 * kPi * kPi - est.interval->lambda_hi > 3.0 * kPi * kPi - 1.0);
}

TEST_CASE("multiplier sweep rows record success and diagnostics") {
  const Weight one = Weight::constant(1.0);
  const std::vector<double> grid{5.0, 10.0, 20.0};
  const std::vector<SweepRow> rows =
      lambda_sweep(Nonlinearity::logistic(), one, grid, 0.01, fast_shoot());
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].lambda == 5.0);
  CHECK_FALSE(rows[0].success);  // below the first eigenvalue: no root
  CHECK(rows[0].status == "no-sign-change");

  CHECK(rows[1].lambda == 10.0);
  CHECK(rows[1].success);
  CHECK(rows[1].status == "solution");
  CHECK(rows[1].energy < 0.01);
  CHECK(rows[1].min_interior > 0.0);
  CHECK(rows[1].boundary_miss <= 1e-10);

  CHECK_FALSE(rows[2].success);  // the branch at lambda = 20 is no longer small
}

TEST_CASE("sweep over the linear family never succeeds") {
  const Weight one = Weight::constant(1.0);
  std::vector<double> grid;
  for (int k = 0; k < 25; ++k) grid.push_back(2.0 + 2.0 * k);
  const std::vector<SweepRow> rows =
      lambda_sweep(Nonlinearity::linear(1.0), one, grid, 0.01, fast_shoot());
  for (const SweepRow& row : rows) {
    CHECK_FALSE(row.success);
    CHECK((row.status == "no-sign-change" || row.status == "eigenvalue"));
  }
}
