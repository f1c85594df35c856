#pragma once

#include <span>
#include <string>
#include <vector>

#include "lmm/solver.hpp"

namespace lmm {

enum class DensityVariable { Momentum, Radius };

/// Sampled probability density in p or in r.
struct DensityCurve {
  DensityVariable variable = DensityVariable::Momentum;
  std::vector<double> grid;
  std::vector<double> values;
  std::string state_label;
  int mesh_n = 0;
  double h = 0.0;
};

/// P(p) = (1/h) (sum_i C_i f_i(p/h))^2.
DensityCurve momentum_density(const SolveResult& result, int state_index,
                              std::span<const double> grid);

/// R(r) = (2 h^3 / pi) (sum_i C_i sqrt(lambda_i) x_i r j_l(h x_i r))^2.
/// The i^l phase of the position-space basis functions cancels in the square.
DensityCurve radial_density(const SolveResult& result, int state_index,
                            std::span<const double> grid);

enum class CoulombState { S1, S2, P1 };

/// Exact densities of p^2 - 1/r for 1S, 2S, 1P (Bohr radius 2, since mu = 1/2 and a = 1).
DensityCurve analytic_coulomb_reference(CoulombState state, DensityVariable variable,
                                        std::span<const double> grid);

/// n uniform points on [0, max].
std::vector<double> uniform_grid(double max, int points);

/// Default grids: p in [0, 3 h sqrt(x_N)], r in [0, min(50, 40 / (h x_1))], 400 points.
std::vector<double> default_momentum_grid(const Mesh& mesh, int points = 400);
std::vector<double> default_radius_grid(const Mesh& mesh, int points = 400);

/// Trapezoidal integral of a sampled curve.
double trapezoid(std::span<const double> grid, std::span<const double> values);

}  // namespace lmm
