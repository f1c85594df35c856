#include <doctest.h>

#include <cmath>
#include <vector>

#include "lmm/errors.hpp"
#include "lmm/lagrange_basis.hpp"
#include "lmm/quadrature.hpp"

using namespace lmm;

TEST_SUITE("lagrange_basis") {

TEST_CASE("cardinality at the nodes") {
  for (int n : {1, 2, 10, 60, 300}) {
    const Mesh mesh = build_mesh(n, 0.5);
    const LagrangeBasis basis(mesh);
    const int step = n > 20 ? n / 7 : 1;
    for (int i = 0; i < n; i += step) {
      const double diag = std::exp(-0.5 * mesh.log_weight(i));
      CHECK(basis.eval(i, mesh.node(i)) == doctest::Approx(diag).epsilon(1e-10));
      for (int j = 0; j < n; j += step) {
        if (j != i) CHECK(std::abs(basis.eval(i, mesh.node(j))) < 1e-10 * diag);
      }
    }
  }
}

TEST_CASE("vanishes at the origin") {
  const Mesh mesh = build_mesh(8, 1.0);
  const LagrangeBasis basis(mesh);
  for (int i = 0; i < 8; ++i) CHECK(basis.eval(i, 0.0) == 0.0);
}

TEST_CASE("continuous across the node window") {
  const Mesh mesh = build_mesh(30, 1.0);
  const LagrangeBasis basis(mesh);
  for (int i : {0, 7, 29}) {
    const double x = mesh.node(i);
    const double at = basis.eval(i, x);
    for (double d : {1e-7, 1e-6, 1e-5}) {
      CHECK(basis.eval(i, x * (1.0 + d)) == doctest::Approx(at).epsilon(1e-3));
      CHECK(basis.eval(i, x * (1.0 - d)) == doctest::Approx(at).epsilon(1e-3));
    }
  }
}

TEST_CASE("explicit formula off the nodes") {
  // f_i(x) = (-1)^i x_i^{-1/2} x (x - x_i)^{-1} L_N(x) e^{-x/2}, i = 1..N
  const Mesh mesh = build_mesh(3, 1.0);
  const LagrangeBasis basis(mesh);
  const double x = 0.8;
  const double l3 = std::laguerre(3, x);
  for (int k = 0; k < 3; ++k) {
    const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
    const double ref = sign / std::sqrt(mesh.node(k)) * x / (x - mesh.node(k)) * l3 * std::exp(-x / 2.0);
    CHECK(basis.eval(k, x) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("quadrature orthonormality") {
  const Mesh mesh = build_mesh(25, 1.0);
  const LagrangeBasis basis(mesh);
  for (int i = 0; i < 25; i += 3) {
    for (int j = 0; j < 25; j += 4) {
      double s = 0.0;
      for (int k = 0; k < 25; ++k) {
        s += std::exp(mesh.log_weight(k)) * basis.eval(i, mesh.node(k)) * basis.eval(j, mesh.node(k));
      }
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("near-orthonormality under exact integration, N=20") {
  // 10000-interval composite Simpson rule on [0, x_N + 40]
  const int n = 20;
  const Mesh mesh = build_mesh(n, 1.0);
  const LagrangeBasis basis(mesh);
  const double upper = mesh.node(n - 1) + 40.0;
  const int intervals = 10000;
  const double dx = upper / intervals;
  std::vector<std::vector<double>> f(n, std::vector<double>(intervals + 1));
  for (int q = 0; q <= intervals; ++q) {
    for (int i = 0; i < n; ++i) f[i][q] = basis.eval(i, q * dx);
  }
  // exact overlap: delta_ij + (-1)^{i-j} (x_i x_j)^{-1/2}
  double max_dev = 0.0;
  double max_err = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int q = 0; q <= intervals; ++q) {
        const double wq = (q == 0 || q == intervals) ? 1.0 : (q % 2 == 1 ? 4.0 : 2.0);
        s += wq * f[i][q] * f[j][q];
      }
      s *= dx / 3.0;
      const double dev = s - (i == j ? 1.0 : 0.0);
      const double sign = (j - i) % 2 == 0 ? 1.0 : -1.0;
      max_dev = std::max(max_dev, std::abs(dev));
      max_err = std::max(max_err, std::abs(dev - sign / std::sqrt(mesh.node(i) * mesh.node(j))));
    }
  }
  CHECK(max_err < 5e-5);
  CHECK(max_dev > 1e-8);
}

TEST_CASE("eval_batch") {
  const Mesh mesh = build_mesh(2, 1.0);
  const LagrangeBasis basis(mesh);
  const std::vector<double> ones{1.0, 1.0};
  CHECK(basis.eval_batch(ones, std::vector<double>{0.0})[0] == 0.0);

  const std::vector<double> zeros{0.0, 0.0};
  for (double v : basis.eval_batch(zeros, std::vector<double>{0.0, 0.3, 2.0, 9.0})) CHECK(v == 0.0);

  const Mesh m5 = build_mesh(5, 1.0);
  const LagrangeBasis b5(m5);
  const std::vector<double> xs(m5.nodes().begin(), m5.nodes().end());
  for (int i = 0; i < 5; ++i) {
    std::vector<double> e(5, 0.0);
    e[i] = 1.0;
    const auto col = b5.eval_batch(e, xs);
    for (int j = 0; j < 5; ++j) CHECK(col[j] == doctest::Approx(b5.eval(i, xs[j])).epsilon(1e-14));
  }
  const std::vector<double> c{0.3, -1.2, 0.5, 2.0, -0.7};
  const double x = 3.3;
  double ref = 0.0;
  for (int i = 0; i < 5; ++i) ref += c[i] * b5.eval(i, x);
  CHECK(b5.eval_batch(c, std::vector<double>{x})[0] == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("far tail at large N stays finite") {
  const Mesh mesh = build_mesh(300, 0.5);
  const LagrangeBasis basis(mesh);
  for (double x : {0.5, 400.0, 1500.0, 3000.0}) {
    for (int i : {0, 150, 299}) CHECK(std::isfinite(basis.eval(i, x)));
  }
}

TEST_CASE("errors") {
  const Mesh mesh = build_mesh(4, 1.0);
  const LagrangeBasis basis(mesh);
  CHECK_THROWS_AS(basis.eval(4, 1.0), ParameterError);
  CHECK_THROWS_AS(basis.eval(-1, 1.0), ParameterError);
  CHECK_THROWS_AS(basis.eval(0, -0.1), ParameterError);
  CHECK_THROWS_AS(basis.eval_batch(std::vector<double>(3, 1.0), std::vector<double>{1.0}), ParameterError);
}

}
