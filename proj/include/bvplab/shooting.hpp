#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bvplab/grid.hpp"
#include "bvplab/nonlinearity.hpp"
#include "bvplab/quadrature.hpp"

namespace bvplab {

// ---------------------------------------------------------------------------
// Initial value problem integrator
// ---------------------------------------------------------------------------

/// Samples of (t, u, u') produced by RK4 with fixed step 1/N on
///   u'' = -lambda alpha(t) f(u),  u(0) = 0,  u'(0) = slope.
struct Trajectory {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> v;  // u'
  bool diverged = false;
  double blow_up_time = 0.0;

  double miss() const { return u.back(); }           // u(1)
  double boundary_miss() const { return std::abs(u.back()); }

  double min_interior() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j + 1 < u.size(); ++j) m = std::min(m, u[j]);
    return m;
  }

  double sup_abs_u() const {
    double m = 0.0;
    for (double x : u) m = std::max(m, std::abs(x));
    return m;
  }

  /// Integral of |u'|^2 over [0, 1], composite Simpson on the samples.
  double energy() const {
    std::vector<double> sq(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) sq[j] = v[j] * v[j];
    return simpson_uniform(sq, t[1] - t[0]);
  }
};

/// Classical 4th-order Runge-Kutta on the first-order system
/// (u, u')' = (u', -lambda alpha(t) f(u)). N is forced even so that the
/// sample count N+1 is odd and Simpson applies directly to the samples.
inline Trajectory integrate(const Nonlinearity& f, const Weight& alpha, double lambda,
                            double slope, int N) {
  if (!(lambda > 0.0)) throw std::invalid_argument("integrate: lambda must be positive");
  if (N < 100) throw std::invalid_argument("integrate: need N >= 100");
  if (N % 2 != 0) ++N;
  const double h = 1.0 / N;

  Trajectory traj;
  traj.t.resize(static_cast<std::size_t>(N) + 1);
  traj.u.resize(static_cast<std::size_t>(N) + 1);
  traj.v.resize(static_cast<std::size_t>(N) + 1);

  const auto accel = [&](double t, double u) { return -lambda * alpha(t) * f(u); };

  double u = 0.0, v = slope;
  traj.t[0] = 0.0;
  traj.u[0] = 0.0;
  traj.v[0] = v;
  for (int j = 0; j < N; ++j) {
    const double t0 = j * h;
    const double k1u = v, k1v = accel(t0, u);
    const double k2u = v + 0.5 * h * k1v, k2v = accel(t0 + 0.5 * h, u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = accel(t0 + 0.5 * h, u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = accel(t0 + h, u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const std::size_t idx = static_cast<std::size_t>(j) + 1;
    traj.t[idx] = (j + 1 == N) ? 1.0 : (j + 1) * h;
    traj.u[idx] = u;
    traj.v[idx] = v;
    if (!std::isfinite(u) || !std::isfinite(v) || std::abs(u) > 1e30 || std::abs(v) > 1e30) {
      traj.diverged = true;
      traj.blow_up_time = traj.t[idx];
      traj.t.resize(idx + 1);
      traj.u.resize(idx + 1);
      traj.v.resize(idx + 1);
      break;
    }
  }
  return traj;
}

/// Nodal restriction of a trajectory onto a mesh (linear interpolation
/// between samples), for comparing oracle trajectories with mesh functions.
inline GridFunction resample_to_grid(const Trajectory& traj, const Grid& grid) {
  GridFunction out(grid);
  const double dt = traj.t[1] - traj.t[0];
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.node(i);
    std::size_t j = static_cast<std::size_t>(t / dt);
    if (j + 1 >= traj.t.size()) j = traj.t.size() - 2;
    const double w = (t - traj.t[j]) / dt;
    out[i] = (1.0 - w) * traj.u[j] + w * traj.u[j + 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shooting
// ---------------------------------------------------------------------------

struct ShootOptions {
  int rk_steps = 10000;       // RK4 steps per integration
  int ladder_rungs = 64;      // automatic bracket: geometric slope ladder
  double s_floor_factor = 1e-6;  // bottom rung = factor * sqrt(r)
  double s_cap_factor = 10.0;    // top rung = factor * sqrt(r)
  double prop_tol = 1e-9;     // relative proportionality certificate tol
  double kappa_tol = 1e-8;    // |u(1; s)/s| below this = resonant lambda
  double bisect_rel = 1e-14;  // slope-bracket width stop, relative
  int bisect_max = 200;
  double shoot_tol = 1e-8;    // accepted |u(1)| relative to sup|u|
};

struct ShotSolution {
  double lambda = 0.0;
  double slope = 0.0;
  Trajectory trajectory;
  double boundary_miss = 0.0;
  double energy = 0.0;  // integral of |u'|^2 by Simpson on the samples
};

/// status values:
///   "solution"             positive solution found
///   "no-sign-change"       miss function does not change sign on the bracket
///   "eigenvalue"           miss proportional to slope and essentially zero:
///                          the multiplier resonates with the linear spectrum
///   "positivity-rejected"  root found but the trajectory dips non-positive
///   "diverged"             integration blew up inside the bracket
struct ShootOutcome {
  std::optional<ShotSolution> solution;
  std::string status;
};

namespace detail {

inline double miss_of(const Nonlinearity& f, const Weight& alpha, double lambda, double s,
                      int N, bool* diverged = nullptr) {
  const Trajectory traj = integrate(f, alpha, lambda, s, N);
  if (diverged) *diverged = traj.diverged;
  if (traj.diverged) return traj.u.back() >= 0.0 ? 1e30 : -1e30;
  return traj.miss();
}

/// Boundary value u(1) of the signed linear problem u'' = -lambda c alpha(t) u,
/// u(0) = 0, u'(0) = 1. Unlike the positive-part families, the trajectory
/// keeps oscillating after it crosses zero, which is what produces the
/// higher sign changes of the Sturm-Liouville miss function.
inline double linear_miss(double c, const Weight& alpha, double lambda, int N) {
  if (N % 2 != 0) ++N;
  const double h = 1.0 / N;
  const auto accel = [&](double t, double u) { return -lambda * c * alpha(t) * u; };
  double u = 0.0, v = 1.0;
  for (int j = 0; j < N; ++j) {
    const double t0 = j * h;
    const double k1u = v, k1v = accel(t0, u);
    const double k2u = v + 0.5 * h * k1v, k2v = accel(t0 + 0.5 * h, u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v, k3v = accel(t0 + 0.5 * h, u + 0.5 * h * k2u);
    const double k4u = v + h * k3v, k4v = accel(t0 + h, u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return u;
}

inline ShootOutcome finish_root(const Nonlinearity& f, const Weight& alpha, double lambda,
                                double s_root, const ShootOptions& opt) {
  Trajectory traj = integrate(f, alpha, lambda, s_root, opt.rk_steps);
  if (traj.diverged) return {std::nullopt, "diverged"};
  if (!(traj.min_interior() > 0.0)) return {std::nullopt, "positivity-rejected"};
  ShotSolution sol;
  sol.lambda = lambda;
  sol.slope = s_root;
  sol.boundary_miss = traj.boundary_miss();
  sol.energy = traj.energy();
  sol.trajectory = std::move(traj);
  return {std::move(sol), "solution"};
}

}  // namespace detail

/// Bisection for a root of the miss function m(s) = u(1; s) on an explicit
/// slope bracket. Returns a solution only when m changes sign on the bracket
/// and the root's trajectory stays positive on the interior samples.
inline ShootOutcome shoot(const Nonlinearity& f, const Weight& alpha, double lambda,
                          double s_lo, double s_hi, const ShootOptions& opt = {}) {
  if (!(0.0 < s_lo && s_lo < s_hi))
    throw std::invalid_argument("shoot: need 0 < s_lo < s_hi");
  bool div_lo = false, div_hi = false;
  double m_lo = detail::miss_of(f, alpha, lambda, s_lo, opt.rk_steps, &div_lo);
  double m_hi = detail::miss_of(f, alpha, lambda, s_hi, opt.rk_steps, &div_hi);
  if (div_lo && div_hi) return {std::nullopt, "diverged"};
  if (m_lo == 0.0) return detail::finish_root(f, alpha, lambda, s_lo, opt);
  if (m_hi == 0.0) return detail::finish_root(f, alpha, lambda, s_hi, opt);
  if (m_lo * m_hi > 0.0) return {std::nullopt, "no-sign-change"};

  double a = s_lo, b = s_hi;
  for (int it = 0; it < opt.bisect_max && (b - a) > opt.bisect_rel * b; ++it) {
    const double mid = 0.5 * (a + b);
    const double m_mid = detail::miss_of(f, alpha, lambda, mid, opt.rk_steps);
    if (m_mid == 0.0) {
      a = b = mid;
      break;
    }
    if (m_lo * m_mid < 0.0) {
      b = mid;
    } else {
      a = mid;
      m_lo = m_mid;
    }
  }
  return detail::finish_root(f, alpha, lambda, 0.5 * (a + b), opt);
}

/// Automatic-bracket shooting: a geometric slope ladder spanning
/// [s_floor_factor, s_cap_factor] * sqrt(r). Before the full scan, a
/// proportionality certificate on the bottom/middle/top rungs detects the
/// positively-homogeneous (linear) case, where m(s)/s is constant: such a
/// miss function either vanishes identically (resonant multiplier,
/// status "eigenvalue") or never changes sign (status "no-sign-change") —
/// no bisection can help, and the scan is skipped.
inline ShootOutcome auto_shoot(const Nonlinearity& f, const Weight& alpha, double lambda,
                               double r, const ShootOptions& opt = {}) {
  if (!(r > 0.0)) throw std::invalid_argument("auto_shoot: r must be positive");
  const int R = std::max(opt.ladder_rungs, 4);
  const double s0 = opt.s_floor_factor * std::sqrt(r);
  const double s1 = opt.s_cap_factor * std::sqrt(r);
  const double ratio = std::pow(s1 / s0, 1.0 / (R - 1));

  std::vector<double> rung(static_cast<std::size_t>(R));
  for (int k = 0; k < R; ++k) rung[static_cast<std::size_t>(k)] = s0 * std::pow(ratio, k);

  // Proportionality certificate across the whole ladder span. The slopes
  // m/s are compared with a mixed tolerance: near a resonant multiplier the
  // common value m/s is itself at roundoff scale, so a purely relative
  // comparison would reject the (exactly homogeneous) linear family there.
  const int mid = R / 2;
  const double m_bot = detail::miss_of(f, alpha, lambda, rung[0], opt.rk_steps);
  const double m_mid = detail::miss_of(f, alpha, lambda, rung[static_cast<std::size_t>(mid)],
                                       opt.rk_steps);
  const double m_top = detail::miss_of(f, alpha, lambda, rung.back(), opt.rk_steps);
  const double kappa = m_bot / rung[0];
  const auto proportional = [&](double m, double s) {
    return std::abs(m / s - kappa) <= opt.prop_tol * (1.0 + std::abs(kappa));
  };
  if (proportional(m_mid, rung[static_cast<std::size_t>(mid)]) &&
      proportional(m_top, rung.back())) {
    if (std::abs(kappa) <= opt.kappa_tol) return {std::nullopt, "eigenvalue"};
    return {std::nullopt, "no-sign-change"};
  }

  // Full ladder scan for the first sign change.
  double m_prev = m_bot;
  for (int k = 1; k < R; ++k) {
    const double s = rung[static_cast<std::size_t>(k)];
    const double m = (k == mid) ? m_mid : (k == R - 1) ? m_top
                                                       : detail::miss_of(f, alpha, lambda, s,
                                                                         opt.rk_steps);
    if (m_prev == 0.0) return detail::finish_root(f, alpha, lambda, rung[k - 1], opt);
    if (m_prev * m < 0.0) {
      ShootOutcome out = shoot(f, alpha, lambda, rung[k - 1], s, opt);
      if (out.status != "positivity-rejected") return out;
      // Rejected root: keep scanning for a higher sign change.
    }
    m_prev = m;
  }
  return {std::nullopt, "no-sign-change"};
}

// ---------------------------------------------------------------------------
// Linear spectrum scan
// ---------------------------------------------------------------------------

/// Eigenvalues of -u'' = lambda c alpha(t) u with zero boundary values,
/// inside (lo, hi): scan the boundary value u(1; lambda) of the unit-slope
/// signed linear IVP over a lambda grid (the miss is slope-independent up
/// to scale) and refine each sign change by bisection.
inline std::vector<double> eigen_scan(double c, const Weight& alpha, double lo, double hi,
                                      int scan_points = 0, int rk_steps = 10000) {
  if (!(c > 0.0)) throw std::invalid_argument("eigen_scan: c must be positive");
  if (!(lo < hi)) throw std::invalid_argument("eigen_scan: empty range");
  const double lo_eff = std::max(lo, 1e-9);
  if (!(lo_eff < hi)) return {};
  if (scan_points <= 0) scan_points = std::max(64, static_cast<int>((hi - lo_eff) / 0.05));

  const auto miss = [&](double lambda) { return detail::linear_miss(c, alpha, lambda, rk_steps); };

  std::vector<double> out;
  double prev_l = lo_eff;
  double prev_m = miss(prev_l);
  for (int k = 1; k <= scan_points; ++k) {
    const double l = lo_eff + (hi - lo_eff) * k / scan_points;
    const double m = miss(l);
    if (prev_m == 0.0) {
      out.push_back(prev_l);
    } else if (prev_m * m < 0.0) {
      double a = prev_l, b = l, ma = prev_m;
      for (int it = 0; it < 200 && (b - a) > 1e-12 * b; ++it) {
        const double midp = 0.5 * (a + b);
        const double mm = miss(midp);
        if (mm == 0.0) {
          a = b = midp;
          break;
        }
        if (ma * mm < 0.0) {
          b = midp;
        } else {
          a = midp;
          ma = mm;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    prev_l = l;
    prev_m = m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplier sweep
// ---------------------------------------------------------------------------

/// One row per multiplier: did shooting find a positive solution with
/// energy below r, and with what slope/energy/miss. status carries the
/// auto_shoot outcome verbatim for the non-success rows.
struct SweepRow {
  double lambda = 0.0;
  bool success = false;
  double slope = 0.0;
  double energy = 0.0;
  double boundary_miss = 0.0;
  double min_interior = 0.0;
  std::string status;
};

inline std::vector<SweepRow> lambda_sweep(const Nonlinearity& f, const Weight& alpha,
                                          const std::vector<double>& lambda_grid, double r,
                                          const ShootOptions& opt = {}) {
  std::vector<SweepRow> rows;
  rows.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    SweepRow row;
    row.lambda = lambda;
    ShootOutcome out = auto_shoot(f, alpha, lambda, r, opt);
    row.status = out.status;
    if (out.solution) {
      const ShotSolution& sol = *out.solution;
      row.slope = sol.slope;
      row.energy = sol.energy;
      row.boundary_miss = sol.boundary_miss;
      row.min_interior = sol.trajectory.min_interior();
      row.success = sol.energy < r;
      if (!row.success) row.status = "energy-above-r";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bvplab
