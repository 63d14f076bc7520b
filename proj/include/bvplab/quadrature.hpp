#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bvplab {

namespace detail {

template <typename F>
double checked_eval(F& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream oss;
    oss << "non-finite integrand sample at xi = " << x;
    throw std::runtime_error(oss.str());
  }
  return v;
}

template <typename F>
double adaptive_simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = checked_eval(f, lm);
  const double frm = checked_eval(f, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b], absolute tolerance tol.
/// Panels are accepted by the classic 15x agreement rule and the returned
/// value carries the Richardson correction. Throws std::runtime_error when
/// the integrand produces a non-finite sample, naming the abscissa.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = detail::checked_eval(f, a);
  const double fb = detail::checked_eval(f, b);
  const double m = 0.5 * (a + b);
  const double fm = detail::checked_eval(f, m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

/// Composite Simpson rule over uniform samples with spacing h.
/// The sample count must be odd (an even number of panels).
inline double simpson_uniform(const std::vector<double>& samples, double h) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("simpson_uniform: needs an odd sample count (even panel count)");
  }
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += samples[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += samples[i];
  return h / 3.0 * (samples.front() + samples.back() + 4.0 * odd + 2.0 * even);
}

}  // namespace bvplab
