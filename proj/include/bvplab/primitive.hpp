#pragma once

#include <cmath>
#include <utility>

#include "bvplab/nonlinearity.hpp"
#include "bvplab/quadrature.hpp"

namespace bvplab {

/// F(xi) = integral of f over [0, xi] by adaptive quadrature, plus the gap
/// function phi(xi) = 2 F(xi) - xi f(xi). Nonnegative phi on (0, a] is
/// equivalent to F(xi)/xi^2 being non-increasing there; phi == 0 is the
/// constant-ratio (linear) degeneracy.
class Primitive {
 public:
  explicit Primitive(Nonlinearity f, double quad_tol = 1e-12)
      : f_(std::move(f)), quad_tol_(quad_tol) {}

  double F(double xi) const {
    if (xi <= 0.0) return 0.0;  // zero extension
    return adaptive_simpson([this](double t) { return f_(t); }, 0.0, xi, quad_tol_);
  }

  double phi(double xi) const {
    if (xi <= 0.0) return 0.0;
    return 2.0 * F(xi) - xi * f_(xi);
  }

  double quad_tol() const { return quad_tol_; }
  const Nonlinearity& nonlinearity() const { return f_; }

 private:
  Nonlinearity f_;
  double quad_tol_;
};

/// Adaptive-quadrature value of F(xi); zero for xi <= 0.
inline double primitive(const Nonlinearity& f, double xi, double quad_tol = 1e-12) {
  if (xi <= 0.0) return 0.0;
  return adaptive_simpson([&f](double t) { return f(t); }, 0.0, xi, quad_tol);
}

/// phi(xi) = 2 F(xi) - xi f(xi). Positive values certify strict local
/// decrease of F(xi)/xi^2.
inline double gap_phi(const Nonlinearity& f, double xi, double quad_tol = 1e-12) {
  if (xi <= 0.0) return 0.0;
  return 2.0 * primitive(f, xi, quad_tol) - xi * f(xi);
}

}  // namespace bvplab
