#pragma once

#include "sgtau/constants.hpp"

namespace sgtau::specfun {

/// ln Gamma(x) for x > 0.  Relative accuracy ~1e-15 on (0, 200].
double ln_gamma(double x);

/// psi_0(x) = Gamma'(x)/Gamma(x) for x > 0.  Absolute accuracy < 1e-13 on (0, 200].
double digamma(double x);

/// ln G(x) for x > 0, G the Barnes double-Gamma with G(z+1) = Gamma(z) G(z).
double ln_barnes_g(double x);

/// Closed form of int_0^z ln Gamma(1+x) dx for z > -1:
///   (z/2) ln(2 pi) - z(z+1)/2 + z ln Gamma(1+z) - ln G(1+z).
double lngamma_antiderivative(double z);

namespace detail {
/// ln |Gamma(x)| for any non-pole x; needed where Gamma ratios change sign.
double ln_abs_gamma(double x);
/// Sign of Gamma(x) (+1/-1); x must not be a nonpositive integer.
int gamma_sign(double x);
}  // namespace detail

}  // namespace sgtau::specfun
