#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bvplab {

/// Uniform mesh on [0, 1] with n interior nodes, h = 1/(n+1).
/// Discrete functions store interior values only; the Dirichlet boundary
/// values u(0) = u(1) = 0 are implicit in every operation.
struct Grid {
  int n = 0;
  double h = 0.0;

  explicit Grid(int interior_nodes) : n(interior_nodes) {
    if (n < 1) throw std::invalid_argument("Grid: need at least one interior node");
    h = 1.0 / (n + 1);
  }

  double node(int i) const { return (i + 1) * h; }

  /// Smallest eigenvalue of the scaled second-difference operator, i.e. of
  /// w -> -(w_{i-1} - 2 w_i + w_{i+1}) / h^2 with zero boundary values.
  double lambda1() const {
    return (2.0 - 2.0 * std::cos(std::numbers::pi * h)) / (h * h);
  }
};

/// Interior nodal values of a mesh function vanishing at both endpoints.
struct GridFunction {
  Grid grid;
  std::vector<double> v;

  explicit GridFunction(const Grid& g) : grid(g), v(static_cast<std::size_t>(g.n), 0.0) {}
  GridFunction(const Grid& g, std::vector<double> values) : grid(g), v(std::move(values)) {
    if (v.size() != static_cast<std::size_t>(g.n))
      throw std::invalid_argument("GridFunction: value count does not match grid");
  }

  int n() const { return grid.n; }
  double h() const { return grid.h; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
};

namespace detail {
inline void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.grid.n != b.grid.n) throw std::invalid_argument("grid mismatch");
}
}  // namespace detail

/// Energy inner product <u, v> = sum of first-difference products / h,
/// the discrete form of the integral of u'v' over (0, 1).
inline double inner(const GridFunction& u, const GridFunction& w) {
  detail::require_same_grid(u, w);
  const int n = u.n();
  const double h = u.h();
  double s = 0.0;
  double up = 0.0, wp = 0.0;  // values at node i-1, boundary = 0
  for (int i = 0; i < n; ++i) {
    s += (u[i] - up) * (w[i] - wp);
    up = u[i];
    wp = w[i];
  }
  s += up * wp;  // last cell against the right boundary zero
  return s / h;
}

inline double norm_sq(const GridFunction& u) { return inner(u, u); }

inline double sup_abs(const GridFunction& u) {
  double m = 0.0;
  for (double x : u.v) m = std::max(m, std::abs(x));
  return m;
}

/// sup|u| / ||u||; bounded by 1/2 for every nonzero mesh function.
inline double embedding_ratio(const GridFunction& u) {
  const double ns = norm_sq(u);
  if (!(ns > 0.0)) throw std::domain_error("embedding_ratio: zero function");
  return sup_abs(u) / std::sqrt(ns);
}

/// Smallest interior nodal value (boundary zeros excluded): positive iff the
/// mesh function is strictly positive at every interior node.
inline double min_interior(const GridFunction& u) {
  double m = u.v.front();
  for (double x : u.v) m = std::min(m, x);
  return m;
}

/// Mass-lumped L2 norm squared: h * sum u_i^2.
inline double lumped_l2_sq(const GridFunction& u) {
  double s = 0.0;
  for (double x : u.v) s += x * x;
  return s * u.h();
}

/// Negative scaled second difference at each interior node:
/// (-u_{i-1} + 2 u_i - u_{i+1}) / h^2 with zero boundary values.
inline std::vector<double> second_difference(const GridFunction& u) {
  const int n = u.n();
  const double h2 = u.h() * u.h();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double left = (i > 0) ? u[i - 1] : 0.0;
    const double right = (i + 1 < n) ? u[i + 1] : 0.0;
    out[static_cast<std::size_t>(i)] = (-left + 2.0 * u[i] - right) / h2;
  }
  return out;
}

/// Solve the discrete Dirichlet problem: find w with
///   (-w_{i-1} + 2 w_i - w_{i+1}) / h^2 = g_i   at every interior node,
/// zero at both endpoints. Equivalently <w, v> = h * sum g_i v_i for all v,
/// so this is the Riesz map from nodal loads to the energy space.
/// Tridiagonal elimination (Thomas algorithm), O(n).
inline GridFunction solve_dirichlet(const Grid& grid, const std::vector<double>& g) {
  const int n = grid.n;
  if (g.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("solve_dirichlet: load count does not match grid");
  const double h2 = grid.h * grid.h;

  // System: 2 w_i - w_{i-1} - w_{i+1} = h^2 g_i. Diagonal 2, off-diagonal -1.
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);  // modified upper diag
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);  // modified rhs
  double beta = 2.0;
  c[0] = -1.0 / beta;
  d[0] = h2 * g[0] / beta;
  for (int i = 1; i < n; ++i) {
    beta = 2.0 + c[static_cast<std::size_t>(i - 1)];
    c[static_cast<std::size_t>(i)] = -1.0 / beta;
    d[static_cast<std::size_t>(i)] =
        (h2 * g[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(i - 1)]) / beta;
  }
  GridFunction w(grid);
  w[n - 1] = d[static_cast<std::size_t>(n - 1)];
  for (int i = n - 2; i >= 0; --i) {
    w[i] = d[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)] * w[i + 1];
  }
  return w;
}

// --- elementary vector algebra on mesh functions ---------------------------

inline GridFunction& axpy(GridFunction& y, double a, const GridFunction& x) {
  detail::require_same_grid(y, x);
  for (int i = 0; i < y.n(); ++i) y[i] += a * x[i];
  return y;
}

inline GridFunction scaled(const GridFunction& u, double a) {
  GridFunction out = u;
  for (double& x : out.v) x *= a;
  return out;
}

inline GridFunction blend(const GridFunction& u, double wu, const GridFunction& w, double ww) {
  detail::require_same_grid(u, w);
  GridFunction out(u.grid);
  for (int i = 0; i < u.n(); ++i) out[i] = wu * u[i] + ww * w[i];
  return out;
}

}  // namespace bvplab
