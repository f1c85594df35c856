#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmm/errors.hpp"
#include "lmm/specfun.hpp"

using namespace lmm;
using namespace lmm::specfun;

TEST_SUITE("specfun") {

TEST_CASE("SignedLogReal round trip") {
  CHECK(SignedLogReal::from_real(0.0).sign == 0);
  CHECK(SignedLogReal::from_real(0.0).to_real() == 0.0);
  CHECK(SignedLogReal::from_real(-2.5).to_real() == doctest::Approx(-2.5).epsilon(1e-15));
  const auto p = SignedLogReal::from_real(-3.0) * SignedLogReal::from_real(4.0);
  CHECK(p.sign == -1);
  CHECK(p.to_real() == doctest::Approx(-12.0).epsilon(1e-15));
}

TEST_CASE("laguerre small cases") {
  for (double x : {0.0, 0.3, 7.0, 120.0}) CHECK(laguerre(0, x).to_real() == 1.0);
  CHECK(laguerre(1, 1.0).sign == 0);
  CHECK(std::abs(laguerre(2, 2.0 - std::sqrt(2.0)).to_real()) < 1e-12);
}

TEST_CASE("laguerre against std::laguerre") {
  for (int n : {1, 2, 5, 17, 40}) {
    for (double x : {0.01, 0.5, 3.0, 11.0, 60.0}) {
      const double ref = std::laguerre(n, x);
      CHECK(laguerre(n, x).to_real() == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("laguerre beyond the double range") {
  // oracle: 40-digit evaluation of the explicit polynomial
  struct Case {
    int n;
    double x;
    int sign;
    double log_mag;
  };
  for (const Case& c : {Case{300, 1000.0, -1, 496.71747932105405373}, Case{300, 1500.0, 1, 699.62423275409452482},
                        Case{150, 300.5, -1, 147.01347350147090035}}) {
    const auto v = laguerre(c.n, c.x);
    CHECK(v.sign == c.sign);
    CHECK(v.log_magnitude == doctest::Approx(c.log_mag).epsilon(1e-12).scale(0.0));
  }
}

TEST_CASE("laguerre recurrence residual") {
  for (double x : {0.2, 5.0, 80.0}) {
    for (int n = 2; n < 60; ++n) {
      const double a = laguerre(n + 1, x).to_real();
      const double b = laguerre(n, x).to_real();
      const double c = laguerre(n - 1, x).to_real();
      const double scale = std::abs((2 * n + 1 - x) * b) + std::abs(n * c) + 1.0;
      CHECK(std::abs((n + 1) * a - (2 * n + 1 - x) * b + n * c) < 1e-11 * scale);
    }
  }
}

TEST_CASE("legendre_p") {
  CHECK(legendre_p(0, 0.3) == 1.0);
  CHECK(legendre_p(1, 0.5) == 0.5);
  CHECK(legendre_p(2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (int l : {3, 8, 25, 60}) {
    for (double t : {-0.99, -0.4, 0.0, 0.37, 0.95}) {
      CHECK(legendre_p(l, t) == doctest::Approx(std::legendre(l, t)).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK_THROWS_AS(legendre_p(2, 1.5), ParameterError);
}

TEST_CASE("legendre_q closed forms") {
  CHECK(legendre_q(0, 3.0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(legendre_q(0, 3.0) == doctest::Approx(0.34657359027997264).epsilon(1e-15));
  CHECK(legendre_q(1, 2.0) == doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-14));
  CHECK(legendre_q(1, 2.0) == doctest::Approx(0.09861228866810978).epsilon(1e-14));
  CHECK_THROWS_AS(legendre_q(0, 1.0), SingularityError);
  CHECK_THROWS_AS(legendre_q(3, 0.5), SingularityError);
}

TEST_CASE("legendre_q against high-precision values") {
  // oracle: 40-digit hypergeometric evaluation
  struct Case {
    int l;
    double z;
    double q;
  };
  for (const Case& c : {Case{5, 1.01, 0.58353074728240244671}, Case{10, 3.0, 2.0794549139134656048e-9},
                        Case{20, 50.0, 3.8992717324775965552e-43}, Case{2, 1.0001, 3.4531043805523094154},
                        Case{40, 1.5, 2.1893770082968802987e-18}, Case{3, 1.25, 0.064836441176215347816}}) {
    CHECK(legendre_q(c.l, c.z) == doctest::Approx(c.q).epsilon(1e-12).scale(0.0));
  }
}

TEST_CASE("legendre_q Wronskian with P_l") {
  // P_l(z) Q_{l-1}(z) - P_{l-1}(z) Q_l(z) = 1/l
  for (double z : {1.05, 1.7, 4.0, 30.0}) {
    double p_prev = 1.0;
    double p = z;
    for (int l = 1; l <= 30; ++l) {
      const double w = p * legendre_q(l - 1, z) - p_prev * legendre_q(l, z);
      CHECK(w == doctest::Approx(1.0 / l).epsilon(1e-10));
      const double next = ((2.0 * l + 1.0) * z * p - l * p_prev) / (l + 1.0);
      p_prev = p;
      p = next;
    }
  }
}

TEST_CASE("spherical_bessel_j limits and zeros") {
  CHECK(spherical_bessel_j(0, 0.0) == 1.0);
  CHECK(spherical_bessel_j(1, 0.0) == 0.0);
  CHECK(spherical_bessel_j(4, 0.0) == 0.0);
  CHECK(std::abs(spherical_bessel_j(0, std::numbers::pi)) < 1e-14);
}

TEST_CASE("spherical_bessel_j against std::sph_bessel") {
  for (int l : {0, 1, 2, 3, 5, 10, 30}) {
    for (double x : {1e-3, 0.2, 0.99, 1.0, 2.5, 9.0, 33.0, 140.0}) {
      const double ref = std::sph_bessel(l, x);
      CHECK(spherical_bessel_j(l, x) == doctest::Approx(ref).epsilon(1e-10).scale(1e-300));
    }
  }
}

TEST_CASE("spherical_bessel_j three-term recurrence") {
  for (double x : {0.7, 4.0, 25.0}) {
    for (int l = 1; l < 20; ++l) {
      const double lhs = spherical_bessel_j(l - 1, x) + spherical_bessel_j(l + 1, x);
      const double rhs = (2.0 * l + 1.0) / x * spherical_bessel_j(l, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1e-12));
    }
  }
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) s += std::log(static_cast<double>(k));
  CHECK(log_gamma(101.0) == doctest::Approx(s).epsilon(1e-10));
}

}
