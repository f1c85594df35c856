#pragma once

#include <span>
#include <vector>

namespace lmm {

/// Gauss-Laguerre mesh: the N roots x_k of L_N and the weights lambda_k of
///   int_0^inf g(x) dx ~= sum_k lambda_k g(x_k),
/// exact when g is a polynomial of degree <= 2N-1 times e^{-x}.
///
/// Weights are stored as ln(lambda_k); lambda_k = e^{x_k} w_k grows like e^{4N}
/// near the last node and overflows for N of a few hundred.
class Mesh {
 public:
  Mesh(int n, double h, std::vector<double> nodes, std::vector<double> log_weights);

  int n() const noexcept { return n_; }
  double h() const noexcept { return h_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> log_weights() const noexcept { return log_weights_; }

  /// Zero-based access.
  double node(int k) const { return nodes_[static_cast<std::size_t>(k)]; }
  double log_weight(int k) const { return log_weights_[static_cast<std::size_t>(k)]; }

 private:
  int n_;
  double h_;
  std::vector<double> nodes_;
  std::vector<double> log_weights_;
};

/// Builds the mesh of size n with scale h (momentum units).
/// Throws ParameterError for n < 1 or h <= 0.
Mesh build_mesh(int n, double h);

/// sum_k lambda_k values[k]. The caller supplies integrands that are already
/// damped by e^{-x} (every Lagrange-function product is).
double quadrature_sum(const Mesh& mesh, std::span<const double> values);

}  // namespace lmm
