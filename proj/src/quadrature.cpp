#include "lmm/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "lmm/errors.hpp"
#include "lmm/specfun.hpp"

namespace lmm {

namespace {

constexpr int kMaxNewtonIterations = 50;
constexpr double kNewtonTolerance = 1e-14;
constexpr double kAcceptTolerance = 1e-11;

// Newton polish of a root of L_n. The step L_n / L_n' is scale free, so the
// rescaled recurrence values can be used directly.
double polish_root(int n, double x) {
  double last_step = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const specfun::LaguerrePair p = specfun::laguerre_pair(n, x);
    // x L_n'(x) = n (L_n(x) - L_{n-1}(x))
    const double derivative = n * (p.value - p.previous) / x;
    const double step = p.value / derivative;
    if (std::abs(step) < kNewtonTolerance * x) return x - step;
    // rounding floor of the recurrence reached
    if (std::abs(step) >= std::abs(last_step) && std::abs(step) < kAcceptTolerance * x) return x;
    x -= step;
    last_step = step;
  }
  throw InternalError("build_mesh: Newton polish of Laguerre root near " + std::to_string(x) +
                      " did not converge");
}

}  // namespace

Mesh::Mesh(int n, double h, std::vector<double> nodes, std::vector<double> log_weights)
    : n_(n), h_(h), nodes_(std::move(nodes)), log_weights_(std::move(log_weights)) {}

Mesh build_mesh(int n, double h) {
  if (n < 1) throw ParameterError("build_mesh: mesh size must be >= 1, got " + std::to_string(n));
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ParameterError("build_mesh: scale h must be positive, got " + std::to_string(h));
  }

  // Jacobi matrix of the Laguerre recurrence: diagonal 2k+1, off-diagonal k.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tridiag;
  tridiag.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (tridiag.info() != Eigen::Success) {
    throw InternalError("build_mesh: tridiagonal eigensolver failed for n=" + std::to_string(n));
  }

  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) nodes[k] = polish_root(n, tridiag.eigenvalues()(k));

  // ln lambda_k = x_k - ln x_k + 2 ln Gamma(N+1) - sum_{j != k} 2 ln|x_k - x_j|
  const double log_factorial_sq = 2.0 * specfun::log_gamma(n + 1.0);
  std::vector<double> log_weights(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != k) s += std::log(std::abs(nodes[k] - nodes[j]));
    }
    log_weights[k] = nodes[k] - std::log(nodes[k]) + log_factorial_sq - 2.0 * s;
  }
  return Mesh(n, h, std::move(nodes), std::move(log_weights));
}

double quadrature_sum(const Mesh& mesh, std::span<const double> values) {
  if (values.size() != static_cast<std::size_t>(mesh.n())) {
    throw ParameterError("quadrature_sum: expected " + std::to_string(mesh.n()) + " values, got " +
                         std::to_string(values.size()));
  }
  double s = 0.0;
  for (int k = 0; k < mesh.n(); ++k) {
    const double v = values[k];
    if (v == 0.0) continue;
    s += std::copysign(std::exp(mesh.log_weight(k) + std::log(std::abs(v))), v);
  }
  return s;
}

}  // namespace lmm
