#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bvplab/grid.hpp"
#include "bvplab/nonlinearity.hpp"
#include "bvplab/primitive.hpp"

namespace bvplab {

/// Mesh, weight, and nonlinearity bundled with the primitive F, ready to
/// evaluate the weighted potential functional
///   J(u) = h * sum_i alpha(t_i) F(u_i)
/// and its gradient with respect to the energy inner product.
class EnergyContext {
 public:
  EnergyContext(Grid grid, Nonlinearity f, Weight alpha, double quad_tol = 1e-12)
      : grid_(grid),
        f_(std::move(f)),
        alpha_(std::move(alpha)),
        prim_(f_, quad_tol),
        alpha_nodes_(static_cast<std::size_t>(grid.n)) {
    for (int i = 0; i < grid_.n; ++i) {
      const double a = alpha_(grid_.node(i));
      if (!(a > 0.0))
        throw std::invalid_argument("EnergyContext: weight must be positive at node " +
                                    std::to_string(i));
      alpha_nodes_[static_cast<std::size_t>(i)] = a;
    }
  }

  const Grid& grid() const { return grid_; }
  const Nonlinearity& nonlinearity() const { return f_; }
  const Weight& weight() const { return alpha_; }
  const Primitive& primitive() const { return prim_; }
  double alpha_at(int i) const { return alpha_nodes_[static_cast<std::size_t>(i)]; }

  /// Weighted potential J(u). Throws when a nodal value leaves the domain of
  /// the nonlinearity (tabulated families only reach to their last knot).
  double J(const GridFunction& u) const {
    require_grid(u);
    const double xi_max = f_.xi_max();
    double s = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
      if (u[i] > xi_max)
        throw std::domain_error("J: nodal value " + std::to_string(u[i]) + " at node " +
                                std::to_string(i) + " exceeds the nonlinearity domain (xi_max = " +
                                std::to_string(xi_max) + ")");
      s += alpha_nodes_[static_cast<std::size_t>(i)] * prim_.F(u[i]);
    }
    return s * grid_.h;
  }

  /// Nodal load g_i = alpha(t_i) f(u_i), the density of dJ(u).
  std::vector<double> load(const GridFunction& u) const {
    require_grid(u);
    std::vector<double> g(static_cast<std::size_t>(grid_.n));
    for (int i = 0; i < grid_.n; ++i)
      g[static_cast<std::size_t>(i)] = alpha_nodes_[static_cast<std::size_t>(i)] * f_(u[i]);
    return g;
  }

  /// Gradient of J at u in the energy inner product: the mesh function w with
  /// <w, v> = h * sum_i alpha(t_i) f(u_i) v_i for every v. One tridiagonal
  /// solve.
  GridFunction grad_J(const GridFunction& u) const {
    return solve_dirichlet(grid_, load(u));
  }

  /// 2 J(u) - <grad J(u), u> assembled nodewise:
  ///   h * sum_i alpha(t_i) * (2 F(u_i) - u_i f(u_i)).
  /// Vanishes identically iff F is exactly quadratic on the range of u.
  double homogeneity_gap(const GridFunction& u) const {
    require_grid(u);
    double s = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
      s += alpha_nodes_[static_cast<std::size_t>(i)] * prim_.phi(u[i]);
    }
    return s * grid_.h;
  }

 private:
  void require_grid(const GridFunction& u) const {
    if (u.grid.n != grid_.n) throw std::invalid_argument("EnergyContext: grid mismatch");
  }

  Grid grid_;
  Nonlinearity f_;
  Weight alpha_;
  Primitive prim_;
  std::vector<double> alpha_nodes_;
};

inline EnergyContext make_energy_context(const Grid& grid, Nonlinearity f, Weight alpha,
                                         double quad_tol = 1e-12) {
  return EnergyContext(grid, std::move(f), std::move(alpha), quad_tol);
}

}  // namespace bvplab
