#include "lmm/specfun.hpp"

#include <cmath>
#include <string>

#include "lmm/errors.hpp"

namespace lmm::specfun {

namespace {

constexpr double kRescaleAbove = 1e150;
constexpr double kRescaleBelow = 1e-150;

// Power series of j_l, converges quickly for x < 1.
double spherical_bessel_series(int l, double x) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / (2.0 * k + 1.0);
  const double half_x2 = 0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -half_x2 / (k * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

}  // namespace

SignedLogReal SignedLogReal::from_real(double v) {
  if (v == 0.0) return {};
  return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
}

double SignedLogReal::to_real() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

LaguerrePair laguerre_pair(int n, double x) {
  LaguerrePair p;
  if (n <= 0) return p;
  double prev = 1.0;
  double cur = 1.0 - x;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    const double big = std::max(std::abs(cur), std::abs(prev));
    if (big > kRescaleAbove || (big < kRescaleBelow && big > 0.0)) {
      cur /= big;
      prev /= big;
      log_scale += std::log(big);
    }
  }
  p.value = cur;
  p.previous = prev;
  p.log_scale = log_scale;
  return p;
}

SignedLogReal laguerre(int n, double x) {
  const LaguerrePair p = laguerre_pair(n, x);
  SignedLogReal r = SignedLogReal::from_real(p.value);
  if (r.sign != 0) r.log_magnitude += p.log_scale;
  return r;
}

double legendre_p(int l, double t) {
  if (l < 0) throw ParameterError("legendre_p: negative degree");
  if (!(std::abs(t) <= 1.0)) throw ParameterError("legendre_p: argument outside [-1, 1]");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int k = 1; k < l; ++k) {
    const double next = ((2.0 * k + 1.0) * t * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre_q(int l, double z) {
  if (l < 0) throw ParameterError("legendre_q: negative degree");
  if (!(z > 1.0)) {
    throw SingularityError("legendre_q: Q_" + std::to_string(l) +
                           " diverges at argument " + std::to_string(z) + " (requires z > 1)");
  }
  const double q0 = std::atanh(1.0 / z);
  if (l == 0) return q0;

  // Q_l is the minimal solution of the recurrence for z > 1, so the ratios
  // Q_k / Q_{k-1} are obtained stably by running it downwards.
  const double log_xi = std::log(z + std::sqrt((z - 1.0) * (z + 1.0)));
  const double margin = 20.0 / log_xi;
  if (margin < 10000.0) {
    const int start = l + 20 + static_cast<int>(std::ceil(margin));
    double ratio = 0.0;
    double product = 1.0;
    for (int k = start; k >= 1; --k) {
      ratio = k / ((2.0 * k + 1.0) * z - (k + 1.0) * ratio);
      if (k <= l) product *= ratio;
    }
    return q0 * product;
  }

  // z within ~1e-7 of 1: both solutions have comparable size and forward
  // recurrence is accurate.
  double prev = q0;
  double cur = z * q0 - 1.0;
  for (int k = 1; k < l; ++k) {
    const double next = ((2.0 * k + 1.0) * z * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double spherical_bessel_j(int l, double x) {
  if (l < 0) throw ParameterError("spherical_bessel_j: negative order");
  if (!(x >= 0.0)) throw ParameterError("spherical_bessel_j: negative argument");
  if (x < 1.0) return spherical_bessel_series(l, x);

  const double s = std::sin(x);
  const double c = std::cos(x);
  switch (l) {
    case 0:
      return s / x;
    case 1:
      return (s / x - c) / x;
    case 2:
      return ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x) / x;
    default:
      break;
  }

  // Miller: downward recurrence from well above max(l, x), normalized
  // against whichever of j_0, j_1 is larger in magnitude.
  const int start = l + 20 + static_cast<int>(std::ceil(x + 10.0 * std::cbrt(x)));
  double upper = 0.0;
  double cur = 1e-300;
  double at_l = 0.0;
  for (int k = start; k >= 1; --k) {
    const double lower = (2.0 * k + 1.0) / x * cur - upper;
    upper = cur;
    cur = lower;
    if (k - 1 == l) at_l = cur;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      upper /= kRescaleAbove;
      at_l /= kRescaleAbove;
    }
  }
  // cur = j_0 (unnormalized), upper = j_1 (unnormalized)
  const double j0 = s / x;
  const double j1 = (s / x - c) / x;
  if (std::abs(j0) >= std::abs(j1)) return at_l * (j0 / cur);
  return at_l * (j1 / upper);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw ParameterError("log_gamma: argument must be positive");
  return std::lgamma(x);
}

}  // namespace lmm::specfun
