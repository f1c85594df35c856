#include <doctest.h>

#include <cmath>
#include <limits>

#include "lmm/errors.hpp"
#include "lmm/operators.hpp"
#include "lmm/quadrature.hpp"

using namespace lmm;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("kinetic matrix") {
  const Mesh mesh = build_mesh(6, 1.0);
  const auto t = kinetic_matrix(mesh, [](double p2) { return p2; });
  CHECK(t.role == OperatorRole::Kinetic);
  CHECK(t.mesh_n == 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double x = mesh.node(i);
      CHECK(t.data(i, j) == (i == j ? doctest::Approx(x * x) : doctest::Approx(0.0)));
    }
  }

  const Mesh m4 = build_mesh(10, 0.4);
  const auto semi = kinetic_matrix(m4, [](double p2) { return 2.0 * std::sqrt(p2 + 1.0); });
  for (int k = 0; k < 10; ++k) {
    const double x = m4.node(k);
    CHECK(semi.data(k, k) == doctest::Approx(2.0 * std::sqrt(0.16 * x * x + 1.0)).epsilon(1e-14));
  }

  CHECK(max_abs(kinetic_matrix(mesh, [](double) { return 0.0; }).data) == 0.0);
  CHECK_THROWS_AS(kinetic_matrix(mesh, [](double p2) { return p2 > 5.0 ? std::nan("") : p2; }), ModelDomainError);
}

TEST_CASE("R^2 small cases") {
  const auto r1 = r_squared_matrix(build_mesh(1, 1.0), 0);
  CHECK(r1.role == OperatorRole::RSquared);
  CHECK(r1.data(0, 0) == doctest::Approx(0.75).epsilon(1e-15));

  const auto r2 = r_squared_matrix(build_mesh(2, 1.0), 0);
  CHECK(r2.data(0, 1) == doctest::Approx(-0.5 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.data(0, 1) == doctest::Approx(-0.353553).epsilon(1e-6));
  CHECK(r2.data(1, 0) == r2.data(0, 1));
}

TEST_CASE("R^2 centrifugal diagonal") {
  const Mesh mesh = build_mesh(12, 0.7);
  const auto a = r_squared_matrix(mesh, 0);
  const auto b = r_squared_matrix(mesh, 2);
  const auto c = r_squared_matrix(mesh, 2, CentrifugalForm::Inverse);
  for (int i = 0; i < 12; ++i) {
    const double x = mesh.node(i);
    CHECK(b.data(i, i) - a.data(i, i) == doctest::Approx(6.0 / (x * x) / 0.49).epsilon(1e-12));
    CHECK(c.data(i, i) - a.data(i, i) == doctest::Approx(6.0 / x / 0.49).epsilon(1e-12));
  }
  CHECK(max_abs(b.data - a.data - (b.data - a.data).diagonal().asDiagonal().toDenseMatrix()) == 0.0);
  CHECK_THROWS_AS(r_squared_matrix(mesh, -1), ParameterError);
}

TEST_CASE("R^2 symmetric positive definite") {
  for (int n : {5, 40, 200}) {
    for (int l : {0, 1, 3}) {
      const auto r = r_squared_matrix(build_mesh(n, 0.5), l);
      CHECK(max_abs(r.data - r.data.transpose()) == 0.0);
      const auto d = spectral_decompose(r);
      CHECK(d.eigenvalues(0) > 0.0);
      CHECK(d.mesh_n == n);
    }
  }
}

TEST_CASE("R^2 scale covariance") {
  const Mesh m1 = build_mesh(15, 1.0);
  const Mesh m2 = build_mesh(15, 0.3);
  const auto a = r_squared_matrix(m1, 1).data;
  const auto b = r_squared_matrix(m2, 1).data;
  CHECK(max_abs(b * 0.09 - a) < 1e-12 * max_abs(a));
}

TEST_CASE("spectral decomposition reconstructs R^2") {
  const auto r = r_squared_matrix(build_mesh(30, 0.5), 1);
  const auto d = spectral_decompose(r);
  const Eigen::MatrixXd back = d.transition * d.eigenvalues.asDiagonal() * d.transition.transpose();
  CHECK(max_abs(back - r.data) < 1e-10 * max_abs(r.data));
  for (int k = 1; k < d.eigenvalues.size(); ++k) CHECK(d.eigenvalues(k - 1) <= d.eigenvalues(k));

  const auto r1 = spectral_decompose(r_squared_matrix(build_mesh(1, 1.0), 0));
  CHECK(r1.eigenvalues(0) == doctest::Approx(0.75));
  CHECK(std::abs(r1.transition(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("degeneracy error") {
  OperatorMatrix bad{Eigen::MatrixXd::Identity(3, 3), OperatorRole::RSquared, 3, 1.0};
  bad.data(1, 1) = -2.0;
  try {
    spectral_decompose(bad);
    FAIL("expected DegeneracyError");
  } catch (const DegeneracyError& e) {
    CHECK(e.value() == doctest::Approx(-2.0));
  }
}

TEST_CASE("spectral calculus identities") {
  const auto r = r_squared_matrix(build_mesh(20, 0.5), 0);
  const auto d = spectral_decompose(r);
  const auto id = potential_matrix(d, [](double r2) { return r2; });
  CHECK(id.role == OperatorRole::Potential);
  CHECK(max_abs(id.data - r.data) < 1e-10 * max_abs(r.data));

  const auto c = potential_matrix(d, [](double) { return -0.599; });
  CHECK(max_abs(c.data + 0.599 * Eigen::MatrixXd::Identity(20, 20)) < 1e-12);

  auto f = [](double r2) { return -1.0 / std::sqrt(r2); };
  auto g = [](double r2) { return std::sqrt(r2); };
  const auto sum = potential_matrix(d, [&](double r2) { return 2.0 * f(r2) + 0.3 * g(r2); });
  const Eigen::MatrixXd lin = 2.0 * potential_matrix(d, f).data + 0.3 * potential_matrix(d, g).data;
  CHECK(max_abs(sum.data - lin) < 1e-12 * max_abs(lin));

  double trace = 0.0;
  for (int k = 0; k < 20; ++k) trace += f(d.eigenvalues(k));
  CHECK(potential_matrix(d, f).data.trace() == doctest::Approx(trace).epsilon(1e-12));

  const auto v = potential_matrix(d, f).data;
  CHECK(max_abs(v - v.transpose()) == 0.0);
}

TEST_CASE("N=1 spectral examples") {
  const auto d = spectral_decompose(r_squared_matrix(build_mesh(1, 1.0), 0));
  CHECK(potential_matrix(d, [](double r2) { return -1.0 / std::sqrt(r2); }).data(0, 0) ==
        doctest::Approx(-1.1547005383792517).epsilon(1e-14));
  const auto o = observable_matrix(d, [](double r2) { return std::sqrt(r2); });
  CHECK(o.role == OperatorRole::Observable);
  CHECK(o.data(0, 0) == doctest::Approx(0.8660254037844386).epsilon(1e-14));
  CHECK(observable_matrix(d, [](double r2) { return r2; }).data(0, 0) == doctest::Approx(0.75));
}

TEST_CASE("model-domain error names the eigenvalue") {
  const auto d = spectral_decompose(r_squared_matrix(build_mesh(4, 1.0), 0));
  CHECK_THROWS_AS(potential_matrix(d, [](double) { return std::numeric_limits<double>::infinity(); }),
                  ModelDomainError);
  CHECK_THROWS_WITH_AS(observable_matrix(d, [](double) { return std::nan(""); }), doctest::Contains("d_"),
                       ModelDomainError);
}

TEST_CASE("role names") {
  CHECK(to_string(OperatorRole::Hamiltonian) == "hamiltonian");
  CHECK(to_string(OperatorRole::RSquared) != to_string(OperatorRole::Kinetic));
}

}
