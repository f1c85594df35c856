#pragma once

#include <string>
#include <variant>

#include "lmm/operators.hpp"
#include "lmm/solver.hpp"

namespace lmm::models {

// Kinetic energies, as functions of p^2.
struct NonrelativisticReduced {
  double mu;  // p^2 / (2 mu)
};
struct PureQuadratic {};  // p^2
struct Semirelativistic {
  double m1;
  double m2;  // sqrt(p^2 + m1^2) + sqrt(p^2 + m2^2)
};
using KineticForm = std::variant<NonrelativisticReduced, PureQuadratic, Semirelativistic>;

// Potentials, as functions of r^2.
struct Coulomb {
  double a;  // -a / r
};
struct Linear {
  double a;  // a r
};
struct Cornell {
  double kappa;
  double a;
  double c;  // -kappa / r + a r + c
};
struct Gaussian {
  double a;
  double b;  // -a exp(-b^2 r^2)
};
struct Yukawa {
  double a;
  double mu;  // -a exp(-mu r) / r
};
using PotentialForm = std::variant<Coulomb, Linear, Cornell, Gaussian, Yukawa>;

/// Throws ParameterError if the parameters are outside their domain.
void validate(const KineticForm& form);
void validate(const PotentialForm& form);

RealFunction make_kinetic(const KineticForm& form);
RealFunction make_potential(const PotentialForm& form);

/// A named kinetic + potential pair; the angular momentum is chosen per solve.
struct ModelDefinition {
  std::string name;
  KineticForm kinetic;
  PotentialForm potential;
  int report_decimals = 9;  // decimals shown in text reports

  ModelSpec spec(int l) const;
};

/// T = p^2, V = -1/r (two unit masses, a = 1), energies in arbitrary units.
ModelDefinition coulomb_test_model();

/// Light-meson Cornell model: m1 = m2 = 0.150 GeV, kappa = 0.437,
/// a = 0.203 GeV^2, C = -0.599 GeV. Energies in GeV.
ModelDefinition fulcher_model();

/// Two unit masses, semirelativistic, in the well -3 exp(-r^2).
/// Has a single bound state with 0 < E < 2.
ModelDefinition gaussian_comparison_model();

/// Builtin by name: "coulomb", "fulcher" or "gaussian". Throws ParameterError otherwise.
ModelDefinition builtin_model(const std::string& name);

/// Exact level of p^2 - 1/r: -1 / (4 (n_r + l + 1)^2).
double analytic_coulomb_energy(int n_r, int l);

}  // namespace lmm::models
