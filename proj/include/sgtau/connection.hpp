#pragma once

// Closed-form connection data: sigma(lambda), the u-prefactor B(nu, sigma),
// the truncated small-t expansion of u, the degenerate sigma -> 1 expansion,
// and the tau amplitudes A(0, lambda) and A(nu, lambda).

#include <memory>
#include <utility>

#include "sgtau/params.hpp"

namespace sgtau::connect {

enum class SigmaMap { forward, inverse };

/// forward: sigma = (2/pi) arcsin(pi lambda); inverse: lambda = sin(pi sigma/2)/pi.
double sigma_of_lambda(double value, SigmaMap direction);

/// B(nu, sigma) = 2^{-3 sigma} Gamma^2(s) Gamma(nu + 1 - s)
///                / (Gamma^2(1 - s) Gamma(nu + s)),  s = (1 - sigma)/2.
/// Negative exactly when sigma > 1 + 2 nu.
double coefficient_B(double nu, double sigma);

/// Three-term truncation of the small-t expansion; the returned value
/// approximates u at argument t/2 (the expansion variable is t):
///   B t^sigma (1 - (nu/B)(1-sigma)^{-2} t^{1-sigma} + B nu (1+sigma)^{-2} t^{1+sigma}).
double u_smallt(double t, double nu, double lambda);

/// c(nu) = 1 + 2 nu (3 ln 2 - 2 gamma_E - psi_0(1 + nu)); c(0) = 1.
double c_of_nu(double nu);

/// Degenerate (sigma = 1) small-t form
///   u(t/2; nu, 1/pi) = (t/2) { nu ln^2 t - c(nu) ln t + (c^2(nu) - 1)/(4 nu) },
/// with the removable nu = 0 limit built in.
double u_degenerate(double t, double nu);

/// Tau amplitude for nu = 0 (Tracy):
///   A(0, lambda) = e^{3 zeta'(-1) - (3 s^2 + 1/6) ln 2} / (G(1+s) G(1-s)).
double coefficient_A_tracy(double lambda);

/// General tau amplitude, valid for s + nu > 0:
///   A(nu, lambda) = e^{3 zeta'(-1) - (3 s^2 + 1/6) ln 2}
///                   * G(1+s+nu) G(1-s+nu) / (G^2(1+s) G^2(1-s))
///                   * G^2(1/2) Gamma(1/2) / (G^2(nu+1/2) Gamma(nu+1/2))
///                   * exp[-(nu/2) ln(Gamma(1-s+nu) Gamma(1+s+nu)/Gamma^2(nu+1/2))]
///                   * (s + nu)^{nu/2}.
/// At nu = 0 this reduces to (and is evaluated by) the Tracy formula.
double coefficient_A(double nu, double lambda);

/// Two-term large-t approximation
///   tau ~ 1 - (lambda^2/2) Gamma^2(nu+1/2) (2t)^{-2nu-1} e^{-2t}
///             { nu - (nu + 1/2)(nu^2 + 3 nu/2 + 1)/t }.
double tau_largetime(double t, double nu, double lambda);

/// Power-law exponents:  u ~ B t^sigma,  tau ~ A t^{sigma (sigma - 2)/4}.
inline double exponent_u(const ModelParams& p) { return p.sigma; }
inline double exponent_tau(const ModelParams& p) {
  return 0.25 * p.sigma * (p.sigma - 2.0);
}

struct ConnectionConstants {
  ModelParams params;
  double B = 0.0;
  double A = 0.0;
  double exponent_u = 0.0;
  double exponent_tau = 0.0;
};
ConnectionConstants connection_constants(const ModelParams& params);

/// Ising scaling functions at (nu, lambda) = (0, 1/pi):
///   F-(t) = 2^{3/8} t^{1/4} tau(t),  F+(t) = F-(t) tanh(q(t)/2).
/// Holds its own solved trajectory; construction is the expensive part.
class IsingScalingFunctions {
 public:
  explicit IsingScalingFunctions(double t_min = 0.008, double tol = 1e-12);
  ~IsingScalingFunctions();
  IsingScalingFunctions(IsingScalingFunctions&&) noexcept;
  IsingScalingFunctions& operator=(IsingScalingFunctions&&) noexcept;

  std::pair<double, double> operator()(double t) const;
  double t_min() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper over a lazily constructed shared instance.
std::pair<double, double> scaling_functions(double t);

}  // namespace sgtau::connect
