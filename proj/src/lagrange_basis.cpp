#include "lmm/lagrange_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lmm/errors.hpp"
#include "lmm/specfun.hpp"

namespace lmm {

namespace {

constexpr double kNodeWindow = 1e-8;

}  // namespace

LagrangeBasis::LagrangeBasis(const Mesh& mesh) : mesh_(&mesh) {
  log_inv_sqrt_weight_.reserve(static_cast<std::size_t>(mesh.n()));
  for (double lw : mesh.log_weights()) log_inv_sqrt_weight_.push_back(-0.5 * lw);
}

LagrangeBasis::Common LagrangeBasis::common(double x) const {
  Common c;
  const auto nodes = mesh_->nodes();
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
  const int upper = static_cast<int>(it - nodes.begin());
  for (int k : {upper - 1, upper}) {
    if (k < 0 || k >= mesh_->n()) continue;
    if (std::abs(x - nodes[k]) < kNodeWindow * (1.0 + nodes[k])) {
      c.node = k;
      return c;
    }
  }
  if (x == 0.0) return c;  // sign 0: every f_i vanishes at the origin
  const specfun::SignedLogReal ln = specfun::laguerre(mesh_->n(), x);
  c.sign = ln.sign;
  c.log_magnitude = ln.log_magnitude + std::log(x) - 0.5 * x;
  return c;
}

double LagrangeBasis::eval(int i, double x) const {
  if (i < 0 || i >= mesh_->n()) {
    throw ParameterError("LagrangeBasis::eval: index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(mesh_->n()) + ")");
  }
  if (!(x >= 0.0)) throw ParameterError("LagrangeBasis::eval: x must be >= 0");
  const Common c = common(x);
  if (c.node >= 0) return c.node == i ? std::exp(log_inv_sqrt_weight_[i]) : 0.0;
  if (c.sign == 0) return 0.0;
  const double xi = mesh_->node(i);
  const double diff = x - xi;
  // (-1)^i with the one-based index i + 1
  const int parity = (i % 2 == 0) ? -1 : 1;
  const int sign = parity * c.sign * (diff > 0.0 ? 1 : -1);
  return sign * std::exp(c.log_magnitude - 0.5 * std::log(xi) - std::log(std::abs(diff)));
}

std::vector<double> LagrangeBasis::eval_batch(std::span<const double> coeffs,
                                              std::span<const double> xs) const {
  if (coeffs.size() != static_cast<std::size_t>(mesh_->n())) {
    throw ParameterError("LagrangeBasis::eval_batch: expected " + std::to_string(mesh_->n()) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  }
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x >= 0.0)) throw ParameterError("LagrangeBasis::eval_batch: x must be >= 0");
    const Common c = common(x);
    if (c.node >= 0) {
      out.push_back(coeffs[c.node] * std::exp(log_inv_sqrt_weight_[c.node]));
      continue;
    }
    if (c.sign == 0) {
      out.push_back(0.0);
      continue;
    }
    double s = 0.0;
    for (int i = 0; i < mesh_->n(); ++i) {
      if (coeffs[i] == 0.0) continue;
      const double xi = mesh_->node(i);
      const double diff = x - xi;
      const int parity = (i % 2 == 0) ? -1 : 1;
      const double term = std::exp(c.log_magnitude - 0.5 * std::log(xi) - std::log(std::abs(diff)));
      s += coeffs[i] * parity * (diff > 0.0 ? term : -term);
    }
    out.push_back(c.sign * s);
  }
  return out;
}

}  // namespace lmm
