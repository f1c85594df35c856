#include "lmm/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmm/errors.hpp"
#include "lmm/lagrange_basis.hpp"
#include "lmm/specfun.hpp"

namespace lmm {

namespace {

void check_grid(std::span<const double> grid) {
  for (double v : grid) {
    if (!(v >= 0.0)) throw ParameterError("density grid values must be >= 0");
  }
}

void check_state(const SolveResult& result, int state_index) {
  if (state_index < 0 || state_index >= result.size()) {
    throw ParameterError("density: state index " + std::to_string(state_index) + " out of range");
  }
}

// Hydrogen-like forms with unit Bohr radius, in the variable u.
double unit_radius_density(CoulombState state, double u) {
  switch (state) {
    case CoulombState::S1: {
      const double f = 2.0 * std::exp(-u);
      return f * f * u * u;
    }
    case CoulombState::S2: {
      const double f = (1.0 - 0.5 * u) * std::exp(-0.5 * u) / std::numbers::sqrt2;
      return f * f * u * u;
    }
    case CoulombState::P1: {
      const double f = u * std::exp(-0.5 * u) / std::sqrt(24.0);
      return f * f * u * u;
    }
  }
  return 0.0;
}

double momentum_reference(CoulombState state, double p) {
  using std::numbers::pi;
  switch (state) {
    case CoulombState::S1: {
      const double d = 1.0 + 4.0 * p * p;
      const double f = 8.0 / std::sqrt(pi) * 2.0 * p / (d * d);
      return f * f;
    }
    case CoulombState::S2: {
      const double d = 1.0 + 16.0 * p * p;
      const double f = 32.0 * std::sqrt(2.0 / pi) * 2.0 * p * (1.0 - 16.0 * p * p) / (d * d * d);
      return f * f;
    }
    case CoulombState::P1: {
      const double d = 1.0 + 16.0 * p * p;
      const double f = 128.0 * std::sqrt(2.0 / (3.0 * pi)) * 4.0 * p * p / (d * d * d);
      return f * f;
    }
  }
  return 0.0;
}

std::string label_of(CoulombState s) {
  switch (s) {
    case CoulombState::S1:
      return "1S";
    case CoulombState::S2:
      return "2S";
    case CoulombState::P1:
      return "1P";
  }
  return "";
}

}  // namespace

DensityCurve momentum_density(const SolveResult& result, int state_index,
                              std::span<const double> grid) {
  check_state(result, state_index);
  check_grid(grid);
  const Mesh& mesh = result.mesh;
  const LagrangeBasis basis(mesh);
  const double h = mesh.h();
  std::vector<double> xs(grid.begin(), grid.end());
  for (double& x : xs) x /= h;
  const Eigen::VectorXd c = result.states.col(state_index);
  const std::vector<double> amp =
      basis.eval_batch(std::span<const double>(c.data(), static_cast<std::size_t>(c.size())), xs);

  DensityCurve out{DensityVariable::Momentum, {grid.begin(), grid.end()}, {}, result.labels[state_index],
                   mesh.n(), h};
  out.values.reserve(amp.size());
  for (double a : amp) out.values.push_back(a * a / h);
  return out;
}

DensityCurve radial_density(const SolveResult& result, int state_index,
                            std::span<const double> grid) {
  check_state(result, state_index);
  check_grid(grid);
  const Mesh& mesh = result.mesh;
  const double h = mesh.h();
  const int n = mesh.n();
  std::vector<double> factor(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    factor[i] = result.states(i, state_index) * std::exp(0.5 * mesh.log_weight(i)) * mesh.node(i);
  }
  const double prefactor = 2.0 * h * h * h / std::numbers::pi;

  DensityCurve out{DensityVariable::Radius, {grid.begin(), grid.end()}, {}, result.labels[state_index],
                   n, h};
  out.values.reserve(grid.size());
  for (double r : grid) {
    double s = 0.0;
    if (r > 0.0) {
      for (int i = 0; i < n; ++i) s += factor[i] * r * specfun::spherical_bessel_j(result.l, h * mesh.node(i) * r);
    }
    out.values.push_back(prefactor * s * s);
  }
  return out;
}

DensityCurve analytic_coulomb_reference(CoulombState state, DensityVariable variable,
                                        std::span<const double> grid) {
  check_grid(grid);
  DensityCurve out{variable, {grid.begin(), grid.end()}, {}, label_of(state), 0, 0.0};
  out.values.reserve(grid.size());
  for (double x : grid) {
    // The Bohr radius of p^2 - 1/r is 2: R(r) = R_1(r/2) / 2.
    out.values.push_back(variable == DensityVariable::Momentum
                             ? momentum_reference(state, x)
                             : 0.5 * unit_radius_density(state, 0.5 * x));
  }
  return out;
}

std::vector<double> uniform_grid(double max, int points) {
  if (points < 1) throw ParameterError("grid needs at least one point");
  if (!(max >= 0.0)) throw ParameterError("grid maximum must be >= 0");
  std::vector<double> g(static_cast<std::size_t>(points));
  if (points == 1) {
    g[0] = 0.0;
    return g;
  }
  for (int k = 0; k < points; ++k) g[k] = max * k / (points - 1.0);
  return g;
}

std::vector<double> default_momentum_grid(const Mesh& mesh, int points) {
  return uniform_grid(3.0 * mesh.h() * std::sqrt(mesh.node(mesh.n() - 1)), points);
}

std::vector<double> default_radius_grid(const Mesh& mesh, int points) {
  return uniform_grid(std::min(50.0, 40.0 / (mesh.h() * mesh.node(0))), points);
}

double trapezoid(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size()) throw ParameterError("trapezoid: size mismatch");
  double s = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    s += 0.5 * (grid[k] - grid[k - 1]) * (values[k] + values[k - 1]);
  }
  return s;
}

}  // namespace lmm
