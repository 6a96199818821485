#include "sgtau/specfun.hpp"

#include <cmath>
#include <string>

#include "sgtau/errors.hpp"

namespace sgtau::specfun {

namespace {

void require_positive(double x, const char* fn) {
  if (!(x > 0.0))
    throw DomainError(std::string(fn) + ": argument must be positive, got " +
                      std::to_string(x));
}

// Asymptotic tail of psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n});
// truncation below 1e-15 for x >= 12.
double digamma_asymptotic(double x) {
  const double r = 1.0 / (x * x);
  double s = -1.0 / 12.0 +
             r * (1.0 / 120.0 +
                  r * (-1.0 / 252.0 +
                       r * (1.0 / 240.0 +
                            r * (-1.0 / 132.0 + r * (691.0 / 32760.0)))));
  return std::log(x) - 0.5 / x + r * s;
}

// ln G(z+1) for z >= 19, with ln A = 1/12 - zeta'(-1).  The Bernoulli tail
// B_{2k+2}/(2k(2k+1)(2k+2) z^{2k}) is below 1e-18 after four terms.
double ln_barnes_g_asymptotic_zp1(double z) {
  const double ln_a = 1.0 / 12.0 - constants.zeta_prime_m1;
  const double r = 1.0 / (z * z);
  const double tail =
      r * (-1.0 / 720.0 +
           r * (1.0 / 5040.0 + r * (-1.0 / 10080.0 + r * (1.0 / 9504.0))));
  return 0.25 * z * z + z * ln_gamma(z + 1.0) -
         (0.5 * z * (z + 1.0) + 1.0 / 12.0) * std::log(z) - ln_a + tail;
}

}  // namespace

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  return std::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

double ln_barnes_g(double x) {
  require_positive(x, "ln_barnes_g");
  // Shift into the asymptotic region with G(x) = G(x+1)/Gamma(x).
  double acc = 0.0;
  while (x < 20.0) {
    acc -= std::lgamma(x);
    x += 1.0;
  }
  return acc + ln_barnes_g_asymptotic_zp1(x - 1.0);
}

double lngamma_antiderivative(double z) {
  if (!(z > -1.0))
    throw DomainError("lngamma_antiderivative: need z > -1, got " +
                      std::to_string(z));
  if (z == 0.0) return 0.0;
  return 0.5 * z * std::log(2.0 * std::numbers::pi) - 0.5 * z * (z + 1.0) +
         z * std::lgamma(1.0 + z) - ln_barnes_g(1.0 + z);
}

namespace detail {

double ln_abs_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw DomainError("ln_abs_gamma: pole at nonpositive integer " +
                      std::to_string(x));
  return std::lgamma(x);
}

int gamma_sign(double x) {
  if (x > 0.0) return 1;
  if (x == std::floor(x))
    throw DomainError("gamma_sign: pole at nonpositive integer " +
                      std::to_string(x));
  // Gamma alternates sign between consecutive nonpositive integers:
  // negative on (-1,0), positive on (-2,-1), ...
  const long long k = static_cast<long long>(std::floor(x));
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace detail

}  // namespace sgtau::specfun
