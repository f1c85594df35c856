#pragma once

#include <functional>
#include <vector>

#include "lmm/operators.hpp"
#include "lmm/quadrature.hpp"

namespace lmm::fourier_direct {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int order);

/// V_FT(k) = 1/(2 pi^2 k) int_0^inf V(r) sin(kr) r dr for V(r) = -a exp(-b^2 r^2):
/// -a exp(-k^2 / (4 b^2)) / (8 pi^{3/2} b^3).
double gaussian_vft(double a, double b, double k);

/// Same transform for V(r) = -a exp(-mu r) / r: -a / (2 pi^2 (k^2 + mu^2)).
/// mu = 0 is the Coulomb transform.
double yukawa_vft(double a, double mu, double k);

/// Partial-wave projection of a numerically given V_FT:
///   V_l(p, p') = 2 pi int_{-1}^{1} P_l(t) V_FT(sqrt(p^2 + p'^2 - 2 p p' t)) dt,
/// evaluated with a Gauss-Legendre rule of the configured order.
class PartialWaveKernel {
 public:
  PartialWaveKernel(int l, std::function<double(double)> v_ft, int quadrature_order = 200);

  int l() const noexcept { return l_; }
  int quadrature_order() const noexcept { return static_cast<int>(rule_.nodes.size()); }

  /// Throws SingularityError if V_FT is not finite at a quadrature sample.
  double operator()(double p, double pp) const;

 private:
  int l_;
  std::function<double(double)> v_ft_;
  GaussLegendreRule rule_;
  std::vector<double> legendre_at_nodes_;
};

double partial_wave(const PartialWaveKernel& kernel, double p, double pp);

/// Closed form of the Yukawa partial wave,
///   -a / (pi p p') Q_l((p^2 + p'^2 + mu^2) / (2 p p')).
/// Throws SingularityError when mu = 0 and p = p' (Q_l at 1).
double yukawa_partial_wave(double a, double mu, int l, double p, double pp);

/// Coulomb partial wave, the mu = 0 case above.
double coulomb_partial_wave(double a, int l, double p, double pp);

/// Potential matrix from a partial wave:
///   V_ij ~= h^3 sqrt(lambda_i lambda_j) x_i x_j V_l(h x_i, h x_j).
OperatorMatrix direct_potential_matrix(const Mesh& mesh,
                                       const std::function<double(double, double)>& partial);
OperatorMatrix direct_potential_matrix(const Mesh& mesh, const PartialWaveKernel& kernel);

/// Coulomb element -(a h / pi) sqrt(lambda_i lambda_j) Q_l((x_i^2 + x_j^2) / (2 x_i x_j)),
/// zero-based indices. Throws SingularityError for i == j.
double coulomb_direct_element(const Mesh& mesh, int i, int j, int l, double a = 1.0);

}  // namespace lmm::fourier_direct
