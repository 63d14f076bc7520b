// The weighted potential functional J, its energy-space gradient, and the
// homogeneity gap 2J(u) - <grad J(u), u>.
//
// Independent references used here:
//   linear family, u_i = sin(pi t_i), alpha == 1:
//       J = h sum c sin^2 = c/2 exactly (sum_i sin^2(pi i h) = (n+1)/2),
//       grad J = (2c/lambda1) u since u is an eigenvector.
//   logistic family: closed form F(x) = x - log(1+x) evaluated per node,
//       against the library's quadrature-built F.
//   u = 0.1 * tent, logistic, alpha == 1: the continuum value
//       2 * 10 * [s^2/2 - (1+s)log(1+s) + s]_0^0.05 = 4.06552e-4 up to O(h^2).

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bvplab/energy.hpp"
#include "bvplab/grid.hpp"
#include "bvplab/nonlinearity.hpp"
#include "bvplab/random.hpp"

using namespace bvplab;

namespace {

GridFunction tent(const Grid& g) {
  GridFunction u(g);
  for (int i = 0; i < g.n; ++i) {
    const double t = g.node(i);
    u[i] = std::min(t, 1.0 - t);
  }
  return u;
}

GridFunction nodal_sine(const Grid& g) {
  GridFunction u(g);
  for (int i = 0; i < g.n; ++i) u[i] = std::sin(std::numbers::pi * g.node(i));
  return u;
}

GridFunction random_positive(const Grid& g, Rng& rng, double amp) {
  GridFunction u(g);
  for (int i = 0; i < g.n; ++i) u[i] = rng.uniform(0.0, amp);
  return u;
}

}  // namespace

TEST_CASE("linear family: J of the nodal sine has a closed form") {
  const Grid g(511);
  const EnergyContext ctx(g, Nonlinearity::linear(1.0), Weight::constant(1.0));
  const GridFunction u = nodal_sine(g);
  CHECK(ctx.J(u) == Catch::Approx(0.5).margin(1e-12));

  // Quadratic homogeneity: J(su) = s^2 J(u) for s >= 0.
  CHECK(ctx.J(scaled(u, 2.0)) == Catch::Approx(4.0 * ctx.J(u)).margin(1e-12));
  CHECK(ctx.J(scaled(u, 0.25)) == Catch::Approx(0.0625 * ctx.J(u)).margin(1e-14));

  const EnergyContext ctx3(g, Nonlinearity::linear(3.0), Weight::constant(1.0));
  CHECK(ctx3.J(u) == Catch::Approx(1.5).margin(1e-11));
}

TEST_CASE("linear family: gradient of an eigenvector is its scaled solve") {
  const Grid g(127);
  const double c = 0.8;
  const EnergyContext ctx(g, Nonlinearity::linear(c), Weight::constant(1.0));
  const GridFunction u = nodal_sine(g);
  const GridFunction w = ctx.grad_J(u);
  const double factor = 2.0 * c / g.lambda1();
  for (int i = 0; i < g.n; ++i) {
    CHECK(w[i] == Catch::Approx(factor * u[i]).margin(1e-10));
  }
}

TEST_CASE("logistic J matches the per-node closed form of F") {
  const Grid g(511);
  const EnergyContext ctx(g, Nonlinearity::logistic(), Weight::constant(1.0));
  const GridFunction u = scaled(tent(g), 0.1);

  double ref = 0.0;
  for (int i = 0; i < g.n; ++i) ref += u[i] - std::log1p(u[i]);
  ref *= g.h;

  const double J = ctx.J(u);
  CHECK(J == Catch::Approx(ref).margin(1e-10));
  // Continuum integral of F(0.1 * min(t, 1-t)); the nodal sum is its
  // trapezoid approximation, accurate to O(h^2).
  CHECK(J == Catch::Approx(4.06552e-4).epsilon(2e-3));
}

TEST_CASE("nonpositive states carry no energy") {
  const Grid g(33);
  const EnergyContext ctx(g, Nonlinearity::logistic(), Weight::constant(1.0));
  GridFunction u(g);
  for (int i = 0; i < g.n; ++i) u[i] = -0.5 - i * 0.01;
  CHECK(ctx.J(u) == 0.0);
  CHECK(ctx.homogeneity_gap(u) == 0.0);
  const GridFunction w = ctx.grad_J(u);
  for (int i = 0; i < g.n; ++i) CHECK(w[i] == 0.0);
}

TEST_CASE("gradient is the Riesz representative of the nodal load") {
  const Grid g(63);
  Rng rng(11);
  const EnergyContext ctx(g, Nonlinearity::logistic(), Weight::constant(2.0));
  const GridFunction u = random_positive(g, rng, 1.0);
  const GridFunction w = ctx.grad_J(u);
  const std::vector<double> load = ctx.load(u);
  for (int trial = 0; trial < 10; ++trial) {
    GridFunction v(g);
    for (int i = 0; i < g.n; ++i) v[i] = rng.uniform(-1.0, 1.0);
    double lumped = 0.0;
    for (int i = 0; i < g.n; ++i) lumped += load[static_cast<std::size_t>(i)] * v[i];
    CHECK(inner(w, v) == Catch::Approx(lumped * g.h).margin(1e-13));
  }
}

TEST_CASE("finite differences of J match the gradient") {
  const Grid g(127);
  Rng rng(5150);
  for (const auto& f :
       {Nonlinearity::logistic(), Nonlinearity::cubic_cap(), Nonlinearity::linear(1.3)}) {
    const EnergyContext ctx(g, f, Weight::constant(1.0));
    const GridFunction u = random_positive(g, rng, 0.5);
    const GridFunction w = ctx.grad_J(u);
    for (int trial = 0; trial < 5; ++trial) {
      GridFunction v(g);
      for (int i = 0; i < g.n; ++i) v[i] = rng.uniform(-1.0, 1.0);
      const double dir = inner(w, v);
      for (double eps : {1e-4, 1e-5}) {
        GridFunction up = u, dn = u;
        axpy(up, eps, v);
        axpy(dn, -eps, v);
        const double fd = (ctx.J(up) - ctx.J(dn)) / (2.0 * eps);
        CHECK(fd == Catch::Approx(dir).margin(1e-6));
      }
    }
  }
}

TEST_CASE("homogeneity gap: nodewise assembly equals 2J - <grad J, u>") {
  const Grid g(255);
  Rng rng(31337);
  const Weight bump = Weight::tabulated({0.0, 0.5, 1.0}, {1.0, 2.0, 1.0});
  for (const auto& f : {Nonlinearity::logistic(), Nonlinearity::cubic_cap()}) {
    for (const auto& alpha : {Weight::constant(1.0), bump}) {
      const EnergyContext ctx(g, f, alpha);
      for (int trial = 0; trial < 4; ++trial) {
        const GridFunction u = random_positive(g, rng, 0.8);
        const double direct = ctx.homogeneity_gap(u);
        const double assembled = 2.0 * ctx.J(u) - inner(ctx.grad_J(u), u);
        CHECK(direct == Catch::Approx(assembled).margin(1e-12));
      }
    }
  }
}

TEST_CASE("homogeneity gap signs: positive for logistic, zero for linear") {
  const Grid g(255);
  const EnergyContext lg(g, Nonlinearity::logistic(), Weight::constant(1.0));
  const EnergyContext ln(g, Nonlinearity::linear(1.0), Weight::constant(1.0));
  const GridFunction u = scaled(tent(g), 0.2);
  CHECK(lg.homogeneity_gap(u) > 0.0);
  CHECK(std::abs(ln.homogeneity_gap(u)) <= 1e-14);
}

TEST_CASE("J rejects states outside the nonlinearity domain") {
  const Grid g(9);
  const Nonlinearity tab = Nonlinearity::tabulated({0.0, 0.5, 1.0}, {0.0, 0.4, 0.9});
  const EnergyContext ctx(g, tab, Weight::constant(1.0));
  GridFunction u(g);
  u[4] = 2.0;  // beyond xi_max = 1
  CHECK_THROWS_WITH(ctx.J(u), Catch::Matchers::ContainsSubstring("node"));
  GridFunction ok(g);
  ok[4] = 0.9;
  CHECK_NOTHROW(ctx.J(ok));
}

TEST_CASE("weighted energy scales with a constant weight") {
  const Grid g(63);
  const GridFunction u = scaled(tent(g), 0.3);
  const EnergyContext one(g, Nonlinearity::logistic(), Weight::constant(1.0));
  const EnergyContext five(g, Nonlinearity::logistic(), Weight::constant(5.0));
  CHECK(five.J(u) == Catch::Approx(5.0 * one.J(u)).margin(1e-12));
  CHECK(five.homogeneity_gap(u) == Catch::Approx(5.0 * one.homogeneity_gap(u)).margin(1e-12));
}
