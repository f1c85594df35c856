#pragma once

#include <span>
#include <vector>

#include "lmm/quadrature.hpp"

namespace lmm {

/// Regularized Lagrange-Laguerre functions
///   f_i(x) = (-1)^i x_i^{-1/2} x (x - x_i)^{-1} L_N(x) e^{-x/2},   i = 1..N,
/// with f_i(x_j) = lambda_j^{-1/2} delta_ij and f_i(0) = 0.
///
/// Indices in this API are zero-based (index k stands for i = k + 1).
/// Holds a reference to the mesh; the mesh must outlive the basis.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(const Mesh& mesh);

  const Mesh& mesh() const noexcept { return *mesh_; }

  /// f_i(x) for zero-based index i. Throws ParameterError on a bad index or x < 0.
  double eval(int i, double x) const;

  /// sum_i coeffs[i] f_i(x) for every x in xs.
  std::vector<double> eval_batch(std::span<const double> coeffs, std::span<const double> xs) const;

 private:
  // Shared factor ln|x L_N(x) e^{-x/2}| and its sign, or the node index when x
  // falls inside the removable-singularity window of a node.
  struct Common {
    int node = -1;
    int sign = 0;
    double log_magnitude = 0.0;
  };
  Common common(double x) const;

  const Mesh* mesh_;
  std::vector<double> log_inv_sqrt_weight_;  // -ln(lambda_i)/2
};

}  // namespace lmm
