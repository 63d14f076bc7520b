#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bvplab/nonlinearity.hpp"
#include "bvplab/quadrature.hpp"

namespace bvplab {

/// Verdicts about the ratio R(xi) = F(xi)/xi^2 on (0, a].
///   a_certified   largest sampled abscissa up to which the ratio is
///                 non-increasing (0 when it already fails at the bottom
///                 of the grid, a when it never fails).
///   witness       an abscissa xi* with phi(xi*) > tol * xi*^2 inside the
///                 smallest sampled prefix, NaN when none exists (constant
///                 ratio).
struct HypothesisReport {
  double a_requested = 0.0;
  double a_certified = 0.0;
  bool nonincreasing = false;
  bool nonconstant_on_all_prefixes = false;
  double witness = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

/// Geometric sample grid on [lo, hi], ascending, fixed density per decade.
/// Constancy and monotonicity of F/xi^2 are delicate near 0, so the grid is
/// logarithmic all the way down.
inline std::vector<double> geometric_grid(double hi, double lo = 1e-8, int per_decade = 512) {
  std::vector<double> xs;
  if (!(hi > lo)) {
    xs.push_back(hi);
    return xs;
  }
  const double decades = std::log10(hi / lo);
  const int m = static_cast<int>(std::ceil(decades * per_decade));
  xs.reserve(static_cast<std::size_t>(m) + 1);
  for (int j = m; j >= 1; --j) {
    xs.push_back(hi * std::pow(10.0, -decades * j / m));
  }
  xs.push_back(hi);
  return xs;
}

inline void require_in_range(const Nonlinearity& f, double a, const char* what) {
  if (!(a > 0.0)) throw std::domain_error(std::string(what) + ": bound must be positive");
  if (a > f.xi_max()) throw std::domain_error(std::string(what) + ": bound exceeds xi_max");
}

/// Grid + cumulative primitive F + ratio F/xi^2 + gap phi, in one sweep.
/// F accumulates segment integrals instead of re-integrating from 0 at every
/// sample; the per-segment tolerance is prorated by length so the total
/// quadrature budget stays at quad_tol.
struct RatioScan {
  std::vector<double> xi;
  std::vector<double> F;
  std::vector<double> ratio;
  std::vector<double> phi;
};

inline RatioScan scan_ratio(const Nonlinearity& f, double a, double quad_tol) {
  RatioScan s;
  s.xi = geometric_grid(a);
  const std::size_t m = s.xi.size();
  s.F.resize(m);
  s.ratio.resize(m);
  s.phi.resize(m);
  double acc = 0.0;
  double prev = 0.0;
  const auto fn = [&f](double t) { return f(t); };
  for (std::size_t j = 0; j < m; ++j) {
    const double x = s.xi[j];
    // Floor keeps rounding noise from forcing full-depth recursion on the
    // tiniest segments; the summed floor stays ~3 decades under quad_tol.
    const double seg_tol = std::max(quad_tol * ((x - prev) / a), 1e-4 * quad_tol);
    acc += adaptive_simpson(fn, prev, x, seg_tol);
    prev = x;
    s.F[j] = acc;
    s.ratio[j] = acc / (x * x);
    s.phi[j] = 2.0 * acc - x * f(x);
  }
  return s;
}

}  // namespace detail

/// True iff phi >= -tol on a dense geometric sample of (0, a], i.e. the ratio
/// F(xi)/xi^2 is non-increasing there (constant counts as non-increasing).
inline bool check_nonincreasing(const Nonlinearity& f, double a, double tol = 1e-9,
                                double quad_tol = 1e-12) {
  detail::require_in_range(f, a, "check_nonincreasing");
  const detail::RatioScan s = detail::scan_ratio(f, a, quad_tol);
  for (double p : s.phi) {
    if (p < -tol) return false;
  }
  return true;
}

/// True iff the ratio F(xi)/xi^2 deviates from its value at b by more than tol
/// somewhere on a dense sample of (0, b].
inline bool check_not_constant(const Nonlinearity& f, double b, double tol = 1e-9,
                               double quad_tol = 1e-12) {
  detail::require_in_range(f, b, "check_not_constant");
  const detail::RatioScan s = detail::scan_ratio(f, b, quad_tol);
  const double rb = s.ratio.back();
  for (double r : s.ratio) {
    if (std::abs(r - rb) > tol) return true;
  }
  return false;
}

/// Full hypothesis scan on (0, a]: certified non-increase bound plus
/// non-constancy of the ratio on every sampled prefix (prefixes shrink
/// geometrically over six decades, so the verdict probes the xi -> 0 regime).
inline HypothesisReport hypothesis_report(const Nonlinearity& f, double a, double tol = 1e-9,
                                          double quad_tol = 1e-12) {
  detail::require_in_range(f, a, "hypothesis_report");
  const detail::RatioScan s = detail::scan_ratio(f, a, quad_tol);
  const std::vector<double>& grid = s.xi;

  HypothesisReport rep;
  rep.a_requested = a;

  rep.a_certified = a;
  rep.nonincreasing = true;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (s.phi[j] < -tol) {
      rep.a_certified = (j == 0) ? 0.0 : grid[j - 1];
      rep.nonincreasing = false;
      break;
    }
  }

  // Non-constancy must hold on every prefix (0, b]; checking geometrically
  // shrinking b suffices, since a deviation inside a small prefix is also a
  // deviation inside every larger one.
  rep.nonconstant_on_all_prefixes = true;
  const int prefix_decades = 6;
  for (int m = 0; m <= prefix_decades; ++m) {
    const double b = a * std::pow(10.0, -m);
    if (b <= grid.front()) break;
    std::size_t jb = grid.size() - 1;
    while (jb > 0 && grid[jb] > b) --jb;
    const double rb = s.ratio[jb];
    bool deviates = false;
    for (std::size_t j = 0; j <= jb; ++j) {
      if (std::abs(s.ratio[j] - rb) > tol) {
        deviates = true;
        break;
      }
    }
    if (!deviates) {
      rep.nonconstant_on_all_prefixes = false;
      break;
    }
    if (m == prefix_decades) {
      // Witness from the smallest prefix: the abscissa with the strongest
      // scaled strict-decrease signal phi(xi)/xi^2.
      double best = -std::numeric_limits<double>::infinity();
      double arg = std::numeric_limits<double>::quiet_NaN();
      for (std::size_t j = 0; j <= jb; ++j) {
        const double scaled = s.phi[j] / (grid[j] * grid[j]);
        if (scaled > best) {
          best = scaled;
          arg = grid[j];
        }
      }
      if (best > tol) rep.witness = arg;
    }
  }
  return rep;
}

/// Certificate of strict ratio decrease near 0 from one-sided derivatives
/// of f at 0. Input: f'(0), f''(0), f'''(0), ... in order. Returns the
/// smallest k with f^(2k)(0) < 0 while all lower even derivatives vanish;
/// nullopt when no such k exists within the supplied order (either some even
/// derivative is positive, which refutes the certificate, or the data ran
/// out). Callers distinguish "refuted/exhausted" from "no derivatives
/// available" at the family level.
inline std::optional<int> certify_decrease_from_derivatives(std::span<const double> derivs,
                                                            double tol = 0.0) {
  // derivs[i] = f^(i+1)(0); even derivative f^(2k)(0) sits at index 2k-1.
  for (int k = 1; 2 * static_cast<std::size_t>(k) - 1 < derivs.size(); ++k) {
    const double even = derivs[2 * static_cast<std::size_t>(k) - 1];
    if (even < -tol) return k;
    if (even > tol) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace bvplab
