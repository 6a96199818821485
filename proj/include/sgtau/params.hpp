#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "sgtau/errors.hpp"

namespace sgtau {

/// Problem coordinates (nu, lambda) with the derived pair
///   sigma = (2/pi) arcsin(pi lambda),  s = (1 - sigma)/2.
/// Valid range: nu > -1/2, lambda pi in [0, 1] (so sigma in [0, 1]).
struct ModelParams {
  double nu = 0.0;
  double lambda = 0.0;
  double sigma = 0.0;
  double s = 0.5;

  static ModelParams from_lambda(double nu, double lambda);
  static ModelParams from_sigma(double nu, double sigma);

  /// Hypothesis of the amplitude formula; equivalent to sigma < 1 + 2 nu.
  bool in_connection_region() const { return s + nu > 0.0; }
};

inline ModelParams ModelParams::from_lambda(double nu, double lambda) {
  if (!(nu > -0.5))
    throw DomainError("ModelParams: need nu > -1/2, got " + std::to_string(nu));
  const double lp = lambda * std::numbers::pi;
  if (!(lp >= 0.0) || lp > 1.0 + 4e-16)
    throw DomainError("ModelParams: need lambda*pi in [0,1], got lambda = " +
                      std::to_string(lambda));
  ModelParams p;
  p.nu = nu;
  p.lambda = lambda;
  p.sigma = (2.0 / std::numbers::pi) * std::asin(std::min(lp, 1.0));
  p.s = 0.5 * (1.0 - p.sigma);
  return p;
}

inline ModelParams ModelParams::from_sigma(double nu, double sigma) {
  if (!(nu > -0.5))
    throw DomainError("ModelParams: need nu > -1/2, got " + std::to_string(nu));
  if (!(sigma >= 0.0 && sigma <= 1.0))
    throw DomainError("ModelParams: need sigma in [0,1], got " + std::to_string(sigma));
  ModelParams p;
  p.nu = nu;
  p.sigma = sigma;
  p.lambda = std::sin(0.5 * std::numbers::pi * sigma) / std::numbers::pi;
  p.s = 0.5 * (1.0 - sigma);
  return p;
}

}  // namespace sgtau
