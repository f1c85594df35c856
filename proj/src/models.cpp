#include "lmm/models.hpp"

#include <cmath>

#include "lmm/errors.hpp"

namespace lmm::models {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void validate(const KineticForm& form) {
  std::visit(Overloaded{
                 [](const NonrelativisticReduced& k) {
                   if (!(k.mu > 0.0)) throw ParameterError("reduced mass must be positive");
                 },
                 [](const PureQuadratic&) {},
                 [](const Semirelativistic& k) {
                   if (!(k.m1 > 0.0) || !(k.m2 > 0.0)) {
                     throw ParameterError("semirelativistic masses must be positive");
                   }
                 },
             },
             form);
}

void validate(const PotentialForm& form) {
  std::visit(Overloaded{
                 [](const Gaussian& v) {
                   if (!(v.b > 0.0)) throw ParameterError("Gaussian range b must be positive");
                 },
                 [](const Yukawa& v) {
                   if (!(v.mu >= 0.0)) throw ParameterError("Yukawa mass mu must be >= 0");
                 },
                 [](const auto&) {},
             },
             form);
}

RealFunction make_kinetic(const KineticForm& form) {
  validate(form);
  return std::visit(Overloaded{
                        [](const NonrelativisticReduced& k) -> RealFunction {
                          return [mu = k.mu](double p2) { return p2 / (2.0 * mu); };
                        },
                        [](const PureQuadratic&) -> RealFunction {
                          return [](double p2) { return p2; };
                        },
                        [](const Semirelativistic& k) -> RealFunction {
                          return [m1 = k.m1, m2 = k.m2](double p2) {
                            return std::sqrt(p2 + m1 * m1) + std::sqrt(p2 + m2 * m2);
                          };
                        },
                    },
                    form);
}

RealFunction make_potential(const PotentialForm& form) {
  validate(form);
  return std::visit(Overloaded{
                        [](const Coulomb& v) -> RealFunction {
                          return [a = v.a](double r2) { return -a / std::sqrt(r2); };
                        },
                        [](const Linear& v) -> RealFunction {
                          return [a = v.a](double r2) { return a * std::sqrt(r2); };
                        },
                        [](const Cornell& v) -> RealFunction {
                          return [kappa = v.kappa, a = v.a, c = v.c](double r2) {
                            const double r = std::sqrt(r2);
                            return -kappa / r + a * r + c;
                          };
                        },
                        [](const Gaussian& v) -> RealFunction {
                          return [a = v.a, b = v.b](double r2) { return -a * std::exp(-b * b * r2); };
                        },
                        [](const Yukawa& v) -> RealFunction {
                          return [a = v.a, mu = v.mu](double r2) {
                            const double r = std::sqrt(r2);
                            return -a * std::exp(-mu * r) / r;
                          };
                        },
                    },
                    form);
}

ModelSpec ModelDefinition::spec(int l) const {
  if (l < 0) throw ParameterError("angular momentum must be >= 0");
  return ModelSpec{make_kinetic(kinetic), make_potential(potential), l, name};
}

ModelDefinition coulomb_test_model() { return {"coulomb", PureQuadratic{}, Coulomb{1.0}}; }

ModelDefinition fulcher_model() {
  return {"fulcher", Semirelativistic{0.150, 0.150}, Cornell{0.437, 0.203, -0.599}, 6};
}

ModelDefinition gaussian_comparison_model() {
  return {"gaussian", Semirelativistic{1.0, 1.0}, Gaussian{3.0, 1.0}, 8};
}

ModelDefinition builtin_model(const std::string& name) {
  if (name == "coulomb") return coulomb_test_model();
  if (name == "fulcher") return fulcher_model();
  if (name == "gaussian") return gaussian_comparison_model();
  throw ParameterError("unknown builtin model '" + name + "' (expected coulomb, fulcher or gaussian)");
}

double analytic_coulomb_energy(int n_r, int l) {
  if (n_r < 0 || l < 0) throw ParameterError("quantum numbers must be >= 0");
  const double n = n_r + l + 1.0;
  return -1.0 / (4.0 * n * n);
}

}  // namespace lmm::models
