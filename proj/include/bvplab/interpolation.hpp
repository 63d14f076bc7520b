#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bvplab {

/// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
/// Reproduces the data exactly, preserves monotonicity on each monotone
/// run of the data, and never oscillates between knots. Evaluation outside
/// the knot range extends by the boundary value.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
      : x_(std::move(xs)), y_(std::move(ys)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
      throw std::invalid_argument("MonotoneCubic: need at least two samples, equal lengths");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
        throw std::invalid_argument("MonotoneCubic: non-finite sample");
      }
      if (i > 0 && !(x_[i] > x_[i - 1])) {
        throw std::invalid_argument("MonotoneCubic: abscissae must be strictly increasing");
      }
    }
    d_.resize(n);
    if (n == 2) {
      d_[0] = d_[1] = slope(0);
      return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const double s0 = slope(k - 1), s1 = slope(k);
      if (s0 * s1 <= 0.0) {
        d_[k] = 0.0;
      } else {
        const double h0 = x_[k] - x_[k - 1], h1 = x_[k + 1] - x_[k];
        const double w0 = 2.0 * h1 + h0, w1 = h1 + 2.0 * h0;
        d_[k] = (w0 + w1) / (w0 / s0 + w1 / s1);
      }
    }
    d_[0] = end_slope(slope(0), slope(1), x_[1] - x_[0], x_[2] - x_[1]);
    d_[n - 1] = end_slope(slope(n - 2), slope(n - 3), x_[n - 1] - x_[n - 2], x_[n - 2] - x_[n - 3]);
  }

  double operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[k] + h * h10 * d_[k] + h01 * y_[k + 1] + h * h11 * d_[k + 1];
  }

  double front_x() const { return x_.front(); }
  double back_x() const { return x_.back(); }
  const std::vector<double>& abscissae() const { return x_; }
  const std::vector<double>& ordinates() const { return y_; }

 private:
  double slope(std::size_t k) const { return (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]); }

  // One-sided three-point slope with the usual Fritsch-Carlson clamp.
  static double end_slope(double s_near, double s_far, double h_near, double h_far) {
    double d = ((2.0 * h_near + h_far) * s_near - h_near * s_far) / (h_near + h_far);
    if (d * s_near <= 0.0) return 0.0;
    if (s_near * s_far <= 0.0 && std::abs(d) > 3.0 * std::abs(s_near)) return 3.0 * s_near;
    return d;
  }

  std::vector<double> x_, y_, d_;
};

}  // namespace bvplab
