#pragma once

#include <cmath>
#include <limits>

namespace lmm::specfun {

/// Real number carried as sign and natural log of its magnitude.
///
/// Used for Laguerre polynomial values at large degree, where |L_N(x)| leaves the
/// double range long before the damped products e^{-x/2} L_N(x) do.
struct SignedLogReal {
  int sign = 0;  // -1, 0 or +1; zero iff the value is exactly zero
  double log_magnitude = -std::numeric_limits<double>::infinity();

  static SignedLogReal from_real(double v);
  double to_real() const;

  SignedLogReal operator*(const SignedLogReal& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, log_magnitude + o.log_magnitude};
  }
};

/// Pair of consecutive Laguerre values sharing one log scale:
/// L_n(x) = value * e^{log_scale}, L_{n-1}(x) = previous * e^{log_scale}.
struct LaguerrePair {
  double value = 1.0;
  double previous = 0.0;
  double log_scale = 0.0;
};

/// L_n(x) and L_{n-1}(x) by the three-term recurrence with periodic rescaling.
LaguerrePair laguerre_pair(int n, double x);

/// Laguerre polynomial L_n(x), normalized so that L_n(0) = 1.
SignedLogReal laguerre(int n, double x);

/// Legendre polynomial P_l(t) for |t| <= 1 (Bonnet recurrence).
double legendre_p(int l, double t);

/// Legendre function of the second kind Q_l(z) for real z > 1.
/// Throws SingularityError for z <= 1, where Q_l diverges.
double legendre_q(int l, double z);

/// Spherical Bessel function of the first kind j_l(x), x >= 0.
double spherical_bessel_j(int l, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace lmm::specfun
