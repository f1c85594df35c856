#include "lmm/operators.hpp"

#include <cmath>
#include <sstream>

#include "lmm/errors.hpp"

namespace lmm {

namespace {

OperatorMatrix spectral_function(const SpectralDecomposition& decomp, const RealFunction& fn,
                                 OperatorRole role, const char* what) {
  const Eigen::Index n = decomp.eigenvalues.size();
  Eigen::VectorXd values(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double d = decomp.eigenvalues(k);
    const double v = fn(d);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << what << ": function is not finite at R^2 eigenvalue d_" << k + 1 << " = " << d;
      throw ModelDomainError(msg.str());
    }
    values(k) = v;
  }
  const Eigen::MatrixXd& s = decomp.transition;
  Eigen::MatrixXd m = s * values.asDiagonal() * s.transpose();
  OperatorMatrix out;
  out.data = 0.5 * (m + m.transpose());
  out.role = role;
  out.mesh_n = decomp.mesh_n;
  out.h = decomp.h;
  return out;
}

}  // namespace

std::string_view to_string(OperatorRole role) {
  switch (role) {
    case OperatorRole::Kinetic:
      return "kinetic";
    case OperatorRole::RSquared:
      return "r_squared";
    case OperatorRole::Potential:
      return "potential";
    case OperatorRole::Hamiltonian:
      return "hamiltonian";
    case OperatorRole::Observable:
      return "observable";
  }
  return "unknown";
}

OperatorMatrix kinetic_matrix(const Mesh& mesh, const RealFunction& kinetic) {
  const int n = mesh.n();
  OperatorMatrix out;
  out.data = Eigen::MatrixXd::Zero(n, n);
  out.role = OperatorRole::Kinetic;
  out.mesh_n = n;
  out.h = mesh.h();
  for (int i = 0; i < n; ++i) {
    const double p = mesh.h() * mesh.node(i);
    const double t = kinetic(p * p);
    if (!std::isfinite(t)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "kinetic_matrix: T(p^2) is not finite at node " << i + 1 << " (p = " << p << ")";
      throw ModelDomainError(msg.str());
    }
    out.data(i, i) = t;
  }
  return out;
}

OperatorMatrix r_squared_matrix(const Mesh& mesh, int l, CentrifugalForm form) {
  if (l < 0) throw ParameterError("r_squared_matrix: angular momentum must be >= 0");
  const int n = mesh.n();
  const double inv_h2 = 1.0 / (mesh.h() * mesh.h());
  const double centrifugal = static_cast<double>(l) * (l + 1);
  OperatorMatrix out;
  out.data.resize(n, n);
  out.role = OperatorRole::RSquared;
  out.mesh_n = n;
  out.h = mesh.h();
  for (int i = 0; i < n; ++i) {
    const double xi = mesh.node(i);
    const double cf = form == CentrifugalForm::InverseSquare ? centrifugal / (xi * xi)
                                                             : centrifugal / xi;
    out.data(i, i) = inv_h2 * ((4.0 + (4.0 * n + 2.0) * xi - xi * xi) / (12.0 * xi * xi) + cf);
    for (int j = 0; j < i; ++j) {
      const double xj = mesh.node(j);
      const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
      const double d = xi - xj;
      const double v = inv_h2 * sign * (xi + xj) / (std::sqrt(xi * xj) * d * d);
      out.data(i, j) = v;
      out.data(j, i) = v;
    }
  }
  return out;
}

SpectralDecomposition spectral_decompose(const OperatorMatrix& r_squared) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r_squared.data);
  if (solver.info() != Eigen::Success) {
    throw InternalError("spectral_decompose: symmetric eigensolver did not converge");
  }
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues();
  out.transition = solver.eigenvectors();
  out.mesh_n = r_squared.mesh_n;
  out.h = r_squared.h;
  if (out.eigenvalues.size() > 0 && !(out.eigenvalues(0) > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectral_decompose: R^2 has non-positive eigenvalue " << out.eigenvalues(0);
    throw DegeneracyError(msg.str(), out.eigenvalues(0));
  }
  return out;
}

OperatorMatrix potential_matrix(const SpectralDecomposition& decomp, const RealFunction& potential) {
  return spectral_function(decomp, potential, OperatorRole::Potential, "potential_matrix");
}

OperatorMatrix observable_matrix(const SpectralDecomposition& decomp,
                                 const RealFunction& observable) {
  return spectral_function(decomp, observable, OperatorRole::Observable, "observable_matrix");
}

}  // namespace lmm
