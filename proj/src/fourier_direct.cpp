#include "lmm/fourier_direct.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "lmm/errors.hpp"
#include "lmm/specfun.hpp"

namespace lmm::fourier_direct {

using std::numbers::pi;

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw ParameterError("gauss_legendre: order must be >= 1");
  // Golub-Welsch: Jacobi matrix with off-diagonal k / sqrt(4k^2 - 1).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 1; k < order; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw InternalError("gauss_legendre: eigensolver failed");

  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    // Newton polish against P_order
    double t = eig.eigenvalues()(k);
    for (int it = 0; it < 5; ++it) {
      double p0 = 1.0;
      double p1 = t;
      for (int j = 1; j < order; ++j) {
        const double p2 = ((2.0 * j + 1.0) * t * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
      }
      const double dp = order * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = t;
    for (int j = 1; j < order; ++j) {
      const double p2 = ((2.0 * j + 1.0) * t * p1 - j * p0) / (j + 1.0);
      p0 = p1;
      p1 = p2;
    }
    const double dp = order * (t * p1 - p0) / (t * t - 1.0);
    rule.nodes[k] = t;
    rule.weights[k] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return rule;
}

double gaussian_vft(double a, double b, double k) {
  if (!(b > 0.0)) throw ParameterError("gaussian_vft: b must be positive");
  if (!(k >= 0.0)) throw ParameterError("gaussian_vft: k must be >= 0");
  return -a * std::exp(-k * k / (4.0 * b * b)) / (8.0 * std::pow(pi, 1.5) * b * b * b);
}

double yukawa_vft(double a, double mu, double k) {
  if (!(k >= 0.0)) throw ParameterError("yukawa_vft: k must be >= 0");
  if (!(mu >= 0.0)) throw ParameterError("yukawa_vft: mu must be >= 0");
  return -a / (2.0 * pi * pi * (k * k + mu * mu));
}

PartialWaveKernel::PartialWaveKernel(int l, std::function<double(double)> v_ft,
                                     int quadrature_order)
    : l_(l), v_ft_(std::move(v_ft)), rule_(gauss_legendre(quadrature_order)) {
  if (l < 0) throw ParameterError("PartialWaveKernel: l must be >= 0");
  legendre_at_nodes_.reserve(rule_.nodes.size());
  for (double t : rule_.nodes) legendre_at_nodes_.push_back(specfun::legendre_p(l, t));
}

double PartialWaveKernel::operator()(double p, double pp) const {
  if (!(p > 0.0) || !(pp > 0.0)) throw ParameterError("partial_wave: momenta must be positive");
  const double sum_sq = p * p + pp * pp;
  const double cross = 2.0 * p * pp;
  double s = 0.0;
  for (std::size_t k = 0; k < rule_.nodes.size(); ++k) {
    const double k2 = std::max(sum_sq - cross * rule_.nodes[k], 0.0);
    const double v = v_ft_(std::sqrt(k2));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "partial_wave: V_FT not finite at k = " << std::sqrt(k2) << " (p = " << p
          << ", p' = " << pp << ")";
      throw SingularityError(msg.str());
    }
    s += rule_.weights[k] * legendre_at_nodes_[k] * v;
  }
  return 2.0 * pi * s;
}

double partial_wave(const PartialWaveKernel& kernel, double p, double pp) { return kernel(p, pp); }

double yukawa_partial_wave(double a, double mu, int l, double p, double pp) {
  if (!(p > 0.0) || !(pp > 0.0)) throw ParameterError("partial_wave: momenta must be positive");
  // z is exactly 1 for mu = 0 and p = p'
  const double z = (p * p + pp * pp + mu * mu) / (2.0 * p * pp);
  try {
    return -a / (pi * p * pp) * specfun::legendre_q(l, z);
  } catch (const SingularityError& e) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "partial wave diverges at p = " << p << ", p' = " << pp << ": " << e.what();
    throw SingularityError(msg.str());
  }
}

double coulomb_partial_wave(double a, int l, double p, double pp) {
  return yukawa_partial_wave(a, 0.0, l, p, pp);
}

OperatorMatrix direct_potential_matrix(const Mesh& mesh,
                                       const std::function<double(double, double)>& partial) {
  const int n = mesh.n();
  const double h = mesh.h();
  OperatorMatrix out;
  out.data.resize(n, n);
  out.role = OperatorRole::Potential;
  out.mesh_n = n;
  out.h = h;
  for (int i = 0; i < n; ++i) {
    const double xi = mesh.node(i);
    for (int j = 0; j <= i; ++j) {
      const double xj = mesh.node(j);
      const double vl = partial(h * xi, h * xj);
      if (vl == 0.0) {
        out.data(i, j) = out.data(j, i) = 0.0;
        continue;
      }
      const double log_mag = 3.0 * std::log(h) + 0.5 * (mesh.log_weight(i) + mesh.log_weight(j)) +
                             std::log(xi) + std::log(xj) + std::log(std::abs(vl));
      out.data(i, j) = out.data(j, i) = std::copysign(std::exp(log_mag), vl);
    }
  }
  return out;
}

OperatorMatrix direct_potential_matrix(const Mesh& mesh, const PartialWaveKernel& kernel) {
  return direct_potential_matrix(mesh, [&kernel](double p, double pp) { return kernel(p, pp); });
}

double coulomb_direct_element(const Mesh& mesh, int i, int j, int l, double a) {
  if (i < 0 || j < 0 || i >= mesh.n() || j >= mesh.n()) {
    throw ParameterError("coulomb_direct_element: index out of range");
  }
  const double xi = mesh.node(i);
  const double xj = mesh.node(j);
  double q = 0.0;
  try {
    q = specfun::legendre_q(l, (xi * xi + xj * xj) / (2.0 * xi * xj));
  } catch (const SingularityError& e) {
    throw SingularityError("coulomb_direct_element(" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") diverges: " + e.what());
  }
  return -(a * mesh.h() / pi) * std::exp(0.5 * (mesh.log_weight(i) + mesh.log_weight(j))) * q;
}

}  // namespace lmm::fourier_direct
