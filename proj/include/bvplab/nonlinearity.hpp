#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bvplab/interpolation.hpp"

namespace bvplab {

enum class NonlinearityFamily { linear, logistic, cubic_cap, tabulated };

/// The reaction term f of the two-point problem: continuous on [0, xi_max],
/// nonnegative, f(0) = 0, and extended by zero on the negative axis.
class Nonlinearity {
 public:
  /// f(xi) = 2 c xi, c > 0. The constant-ratio family: F(xi)/xi^2 == c.
  static Nonlinearity linear(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("Nonlinearity::linear: c must be positive and finite");
    }
    Nonlinearity f(NonlinearityFamily::linear);
    f.c_ = c;
    return f;
  }

  /// f(xi) = xi / (1 + xi).
  static Nonlinearity logistic() { return Nonlinearity(NonlinearityFamily::logistic); }

  /// f(xi) = xi - xi^2 on [0, 1], zero beyond.
  static Nonlinearity cubic_cap() { return Nonlinearity(NonlinearityFamily::cubic_cap); }

  /// Monotone-cubic interpolant of (xs, ys), clamped to >= 0.
  /// Requires xs[0] == 0 and ys[0] == 0 so that f(0) = 0 holds, strictly
  /// increasing abscissae, nonnegative ordinates. xi_max is xs.back().
  static Nonlinearity tabulated(std::vector<double> xs, std::vector<double> ys) {
    if (xs.empty() || xs.front() != 0.0) {
      throw std::invalid_argument("Nonlinearity::tabulated: abscissae must start at 0");
    }
    if (ys.empty() || ys.front() != 0.0) {
      throw std::invalid_argument("Nonlinearity::tabulated: f(0) must be 0");
    }
    for (double y : ys) {
      if (!(y >= 0.0)) {
        throw std::invalid_argument("Nonlinearity::tabulated: ordinates must be nonnegative");
      }
    }
    Nonlinearity f(NonlinearityFamily::tabulated);
    f.xi_max_ = xs.back();
    f.interp_ = std::make_shared<MonotoneCubic>(std::move(xs), std::move(ys));
    return f;
  }

  double operator()(double xi) const {
    if (xi <= 0.0) return 0.0;  // zero extension on the negative axis
    switch (family_) {
      case NonlinearityFamily::linear:
        return 2.0 * c_ * xi;
      case NonlinearityFamily::logistic:
        return xi / (1.0 + xi);
      case NonlinearityFamily::cubic_cap:
        return xi <= 1.0 ? xi * (1.0 - xi) : 0.0;
      case NonlinearityFamily::tabulated: {
        const double v = (*interp_)(xi);
        return v > 0.0 ? v : 0.0;
      }
    }
    return 0.0;
  }

  NonlinearityFamily family() const { return family_; }
  double xi_max() const { return xi_max_; }

  /// The linear family's coefficient c (throws for other families).
  double linear_coefficient() const {
    if (family_ != NonlinearityFamily::linear) {
      throw std::logic_error("linear_coefficient: not the linear family");
    }
    return c_;
  }

  /// Right-derivatives f'(0+), f''(0+), ..., f^(order)(0+), closed-form for
  /// the builtin families; nullopt for tabulated data.
  std::optional<std::vector<double>> derivatives_at_zero(int order) const {
    if (order < 1) return std::vector<double>{};
    std::vector<double> d(static_cast<std::size_t>(order), 0.0);
    switch (family_) {
      case NonlinearityFamily::linear:
        d[0] = 2.0 * c_;
        return d;
      case NonlinearityFamily::logistic: {
        // xi/(1+xi) = xi - xi^2 + xi^3 - ... so f^(m)(0) = (-1)^(m+1) m!
        double fact = 1.0;
        for (int m = 1; m <= order; ++m) {
          fact *= m;
          d[static_cast<std::size_t>(m - 1)] = (m % 2 == 1 ? fact : -fact);
        }
        return d;
      }
      case NonlinearityFamily::cubic_cap:
        d[0] = 1.0;
        if (order >= 2) d[1] = -2.0;
        return d;
      case NonlinearityFamily::tabulated:
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::string describe() const {
    switch (family_) {
      case NonlinearityFamily::linear: {
        std::ostringstream oss;
        oss << "linear:" << c_;
        return oss.str();
      }
      case NonlinearityFamily::logistic:
        return "logistic";
      case NonlinearityFamily::cubic_cap:
        return "cubic_cap";
      case NonlinearityFamily::tabulated: {
        std::ostringstream oss;
        oss << "tabulated[" << interp_->abscissae().size() << " pts, xi_max=" << xi_max_ << "]";
        return oss.str();
      }
    }
    return "?";
  }

 private:
  explicit Nonlinearity(NonlinearityFamily fam) : family_(fam) {}

  NonlinearityFamily family_;
  double c_ = 0.0;
  double xi_max_ = 1e6;  // certified evaluation range for the builtin families
  std::shared_ptr<const MonotoneCubic> interp_;
};

enum class WeightFamily { constant, tabulated };

/// The coefficient alpha on [0,1]; strictly positive.
class Weight {
 public:
  static Weight constant(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("Weight::constant: value must be positive and finite");
    }
    Weight a(WeightFamily::constant);
    a.v_ = v;
    a.min_ = v;
    a.max_ = v;
    return a;
  }

  /// Monotone-cubic interpolant through (ts, vs); knots must cover [0, 1].
  static Weight tabulated(std::vector<double> ts, std::vector<double> vs) {
    Weight a(WeightFamily::tabulated);
    a.interp_ = std::make_shared<MonotoneCubic>(std::move(ts), std::move(vs));
    if (a.interp_->front_x() > 0.0 || a.interp_->back_x() < 1.0) {
      throw std::invalid_argument("Weight::tabulated: knots must cover [0, 1]");
    }
    // Dense scan for the positivity floor; the interpolant cannot stray far
    // from the data between knots, so 4096 samples pin the minimum safely.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const int m = 4096;
    for (int i = 0; i <= m; ++i) {
      const double v = (*a.interp_)(static_cast<double>(i) / m);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!(lo > 0.0)) {
      throw std::invalid_argument("Weight::tabulated: weight must stay strictly positive on [0,1]");
    }
    a.min_ = lo;
    a.max_ = hi;
    return a;
  }

  double operator()(double t) const {
    return family_ == WeightFamily::constant ? v_ : (*interp_)(t);
  }

  WeightFamily family() const { return family_; }
  double min_value() const { return min_; }
  double max_value() const { return max_; }

  std::string describe() const {
    if (family_ == WeightFamily::constant) {
      std::ostringstream oss;
      oss << "constant:" << v_;
      return oss.str();
    }
    std::ostringstream oss;
    oss << "tabulated[" << interp_->abscissae().size() << " pts]";
    return oss.str();
  }

 private:
  explicit Weight(WeightFamily fam) : family_(fam) {}

  WeightFamily family_;
  double v_ = 1.0;
  double min_ = 1.0;
  double max_ = 1.0;
  std::shared_ptr<const MonotoneCubic> interp_;
};

}  // namespace bvplab
