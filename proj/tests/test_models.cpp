#include <doctest.h>

#include <cmath>

#include "lmm/errors.hpp"
#include "lmm/models.hpp"
#include "lmm/solver.hpp"

using namespace lmm;
using namespace lmm::models;

TEST_SUITE("models") {

TEST_CASE("analytic Coulomb levels") {
  CHECK(analytic_coulomb_energy(0, 0) == -0.25);
  CHECK(analytic_coulomb_energy(1, 0) == -0.0625);
  CHECK(analytic_coulomb_energy(0, 1) == -0.0625);
  CHECK_THROWS_AS(analytic_coulomb_energy(-1, 0), ParameterError);
}

TEST_CASE("kinetic and potential forms") {
  CHECK(make_kinetic(PureQuadratic{})(2.0) == 2.0);
  CHECK(make_kinetic(NonrelativisticReduced{0.5})(3.0) == doctest::Approx(3.0));
  CHECK(make_kinetic(Semirelativistic{1.0, 2.0})(0.0) == doctest::Approx(3.0));
  CHECK(make_potential(Coulomb{2.0})(4.0) == doctest::Approx(-1.0));
  CHECK(make_potential(Linear{0.5})(9.0) == doctest::Approx(1.5));
  CHECK(make_potential(Cornell{0.437, 0.203, -0.599})(1.0) == doctest::Approx(-0.437 + 0.203 - 0.599));
  CHECK(make_potential(Gaussian{3.0, 1.0})(1.0) == doctest::Approx(-3.0 * std::exp(-1.0)));
  CHECK(make_potential(Yukawa{1.0, 1.0})(4.0) == doctest::Approx(-std::exp(-2.0) / 2.0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(KineticForm{NonrelativisticReduced{0.0}}), ParameterError);
  CHECK_THROWS_AS(validate(KineticForm{Semirelativistic{-1.0, 1.0}}), ParameterError);
  CHECK_THROWS_AS(validate(PotentialForm{Gaussian{1.0, 0.0}}), ParameterError);
  CHECK_THROWS_AS(validate(PotentialForm{Yukawa{1.0, -0.5}}), ParameterError);
  CHECK_NOTHROW(validate(PotentialForm{Cornell{0.437, 0.203, -0.599}}));
  CHECK_THROWS_AS(coulomb_test_model().spec(-1), ParameterError);
}

TEST_CASE("builtins") {
  CHECK(builtin_model("coulomb").name == "coulomb");
  CHECK(builtin_model("fulcher").name == "fulcher");
  CHECK(builtin_model("gaussian").name == "gaussian");
  CHECK_THROWS_AS(builtin_model("hydrogen"), ParameterError);
  CHECK(fulcher_model().spec(1).l == 1);
}

TEST_CASE("Coulomb test model") {
  const auto r = solve(build_mesh(50, 0.5), coulomb_test_model().spec(0), 1);
  CHECK(std::abs(r.energies[0] + 0.249960128) < 5e-10);
}

TEST_CASE("Cornell meson model") {
  const auto m = fulcher_model();
  CHECK(std::abs(solve(build_mesh(50, 0.5), m.spec(0), 1).energies[0] - 0.702623) < 5e-7);
  CHECK(std::abs(solve(build_mesh(80, 0.5), m.spec(0), 2).energies[1] - 1.415911) < 5e-7);
  CHECK(std::abs(solve(build_mesh(60, 0.5), m.spec(1), 1).energies[0] - 1.240238) < 5e-7);
}

TEST_CASE("Gaussian comparison model") {
  const auto m = gaussian_comparison_model();
  const Mesh mesh = build_mesh(10, 0.4);
  const auto r = solve(mesh, m.spec(0), 2);
  CHECK(std::abs(r.energies[0] - 1.87082354) < 5e-9);
  CHECK(r.energies[0] > 0.0);
  CHECK(r.energies[0] < 2.0);
  CHECK(r.energies[1] > 2.0);

  const Mesh m50 = build_mesh(50, 0.4);
  const auto r50 = solve(m50, m.spec(0), 1);
  const auto decomp = spectral_decompose(r_squared_matrix(m50, 0));
  CHECK(std::abs(expectation(r50, 0, observable_matrix(decomp, m.spec(0).potential)) + 0.8397774) < 5e-8);
}

}
