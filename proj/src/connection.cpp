#include "sgtau/connection.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sgtau/specfun.hpp"
#include "sgtau/tau.hpp"

namespace sgtau::connect {

using specfun::constants;
using specfun::ln_barnes_g;
using specfun::ln_gamma;

double sigma_of_lambda(double value, SigmaMap direction) {
  constexpr double pi = std::numbers::pi;
  if (direction == SigmaMap::forward) {
    const double lp = value * pi;
    if (!(lp >= 0.0 && lp <= 1.0 + 4e-16))
      throw DomainError("sigma_of_lambda: need lambda*pi in [0,1]");
    return (2.0 / pi) * std::asin(std::min(lp, 1.0));
  }
  if (!(value >= 0.0 && value <= 1.0))
    throw DomainError("sigma_of_lambda: need sigma in [0,1]");
  return std::sin(0.5 * pi * value) / pi;
}

double coefficient_B(double nu, double sigma) {
  if (!(nu > -0.5)) throw DomainError("coefficient_B: need nu > -1/2");
  if (!(sigma >= 0.0 && sigma < 1.0))
    throw DomainError("coefficient_B: need sigma in [0,1)");
  const double s = 0.5 * (1.0 - sigma);
  const double den = nu + s;  // only this Gamma argument can be nonpositive
  if (den <= 1e-12 && std::abs(den - std::round(den)) < 1e-12)
    throw DomainError("coefficient_B: Gamma pole at nu + (1-sigma)/2 = " +
                      std::to_string(den));
  const double ln_mag = -3.0 * sigma * constants.ln2 + 2.0 * ln_gamma(s) -
                        2.0 * ln_gamma(1.0 - s) + ln_gamma(nu + 1.0 - s) -
                        specfun::detail::ln_abs_gamma(den);
  return specfun::detail::gamma_sign(den) * std::exp(ln_mag);
}

double u_smallt(double t, double nu, double lambda) {
  const ModelParams p = ModelParams::from_lambda(nu, lambda);
  if (!p.in_connection_region())
    throw DomainError("u_smallt: expansion requires sigma < 1 + 2 nu");
  const double B = coefficient_B(nu, p.sigma);
  if (B == 0.0) throw DomainError("u_smallt: B = 0");
  const double a1 = 1.0 - p.sigma, a2 = 1.0 + p.sigma;
  return B * std::pow(t, p.sigma) *
         (1.0 - (nu / B) / (a1 * a1) * std::pow(t, a1) +
          B * nu / (a2 * a2) * std::pow(t, a2));
}

double c_of_nu(double nu) {
  if (!(nu > -0.5)) throw DomainError("c_of_nu: need nu > -1/2");
  return 1.0 + 2.0 * nu *
                   (3.0 * constants.ln2 - 2.0 * constants.euler_gamma -
                    specfun::digamma(1.0 + nu));
}

double u_degenerate(double t, double nu) {
  if (!(nu > -0.5)) throw DomainError("u_degenerate: need nu > -1/2");
  // With d = 3 ln 2 - 2 gamma_E - psi_0(1+nu):  c = 1 + 2 nu d and
  // (c^2 - 1)/(4 nu) = d (1 + nu d), which covers nu = 0 without a branch.
  const double d = 3.0 * constants.ln2 - 2.0 * constants.euler_gamma -
                   specfun::digamma(1.0 + nu);
  const double c = 1.0 + 2.0 * nu * d;
  const double lt = std::log(t);
  return 0.5 * t * (nu * lt * lt - c * lt + d * (1.0 + nu * d));
}

double coefficient_A_tracy(double lambda) {
  const ModelParams p = ModelParams::from_lambda(0.0, lambda);
  const double s = p.s;
  if (!(s >= 0.0 && s < 0.5))
    throw DomainError("coefficient_A_tracy: need s in [0, 1/2)");
  return std::exp(3.0 * constants.zeta_prime_m1 -
                  (3.0 * s * s + 1.0 / 6.0) * constants.ln2 -
                  ln_barnes_g(1.0 + s) - ln_barnes_g(1.0 - s));
}

double coefficient_A(double nu, double lambda) {
  if (nu == 0.0) return coefficient_A_tracy(lambda);  // removable limit
  const ModelParams p = ModelParams::from_lambda(nu, lambda);
  const double s = p.s;
  if (!p.in_connection_region())
    throw DomainError("coefficient_A: hypothesis s + nu > 0 violated (s = " +
                      std::to_string(s) + ", nu = " + std::to_string(nu) + ")");
  const double lngam_ratio =
      ln_gamma(1.0 - s + nu) + ln_gamma(1.0 + s + nu) - 2.0 * ln_gamma(nu + 0.5);
  const double ln_a =
      3.0 * constants.zeta_prime_m1 -
      (3.0 * s * s + 1.0 / 6.0) * constants.ln2 + ln_barnes_g(1.0 + s + nu) +
      ln_barnes_g(1.0 - s + nu) - 2.0 * ln_barnes_g(1.0 + s) -
      2.0 * ln_barnes_g(1.0 - s) + 2.0 * ln_barnes_g(0.5) + ln_gamma(0.5) -
      2.0 * ln_barnes_g(nu + 0.5) - ln_gamma(nu + 0.5) -
      0.5 * nu * lngam_ratio + 0.5 * nu * std::log(s + nu);
  return std::exp(ln_a);
}

double tau_largetime(double t, double nu, double lambda) {
  if (lambda == 0.0) return 1.0;
  const double pref = 0.5 * lambda * lambda *
                      std::exp(2.0 * ln_gamma(nu + 0.5) -
                               (2.0 * nu + 1.0) * std::log(2.0 * t) - 2.0 * t);
  const double braces = nu - (nu + 0.5) * (nu * nu + 1.5 * nu + 1.0) / t;
  return 1.0 - pref * braces;
}

ConnectionConstants connection_constants(const ModelParams& params) {
  ConnectionConstants c;
  c.params = params;
  c.B = coefficient_B(params.nu, params.sigma);
  c.A = coefficient_A(params.nu, params.lambda);
  c.exponent_u = exponent_u(params);
  c.exponent_tau = exponent_tau(params);
  return c;
}

// --- Ising scaling functions ---

struct IsingScalingFunctions::Impl {
  tau::TauEvaluator eval;
  explicit Impl(double t_min, double tol)
      : eval(ModelParams::from_lambda(0.0, 1.0 / std::numbers::pi),
             tau::TauOptions{.t_min = t_min, .tol = tol}) {}
};

IsingScalingFunctions::IsingScalingFunctions(double t_min, double tol)
    : impl_(std::make_unique<Impl>(t_min, tol)) {}
IsingScalingFunctions::~IsingScalingFunctions() = default;
IsingScalingFunctions::IsingScalingFunctions(IsingScalingFunctions&&) noexcept = default;
IsingScalingFunctions& IsingScalingFunctions::operator=(IsingScalingFunctions&&) noexcept =
    default;

std::pair<double, double> IsingScalingFunctions::operator()(double t) const {
  const tau::TauSample s = impl_->eval.sample(t);
  const double f_minus = std::pow(2.0, 0.375) * std::pow(t, 0.25) * s.tau;
  const double q = impl_->eval.trajectory().q(t);
  return {f_minus, f_minus * std::tanh(0.5 * q)};
}

double IsingScalingFunctions::t_min() const { return impl_->eval.trajectory().t_min; }

std::pair<double, double> scaling_functions(double t) {
  static const IsingScalingFunctions shared;
  return shared(t);
}

}  // namespace sgtau::connect
