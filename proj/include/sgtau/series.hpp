#pragma once

// Truncated generalized power series sum c_E t^E with real exponents E > 0,
// and the local expansions they feed: the small-t series of ln u about the
// power law B t^sigma, with coefficients generated recursively from the
// Painleve-III equation, and the matching series of ln(tau / cosh(q/2)).
// These carry the correction terms that the connection fits subtract.

#include <cstdint>
#include <map>
#include <vector>

#include "sgtau/params.hpp"

namespace sgtau::series {

/// Sparse series keyed by quantized exponent (resolution 1e-9).
class PowerSeries {
 public:
  void add(double exponent, double coeff);
  PowerSeries plus(const PowerSeries& o, double factor = 1.0) const;
  PowerSeries times(const PowerSeries& o, double e_max) const;
  /// exp(series); requires all exponents > 0.
  PowerSeries exp(double e_max) const;
  /// Multiply every term by t^shift.
  PowerSeries shifted(double shift) const;
  PowerSeries truncated(double e_max) const;
  double eval(double t) const;
  double min_exponent() const;
  bool empty() const { return terms_.empty(); }
  std::vector<std::pair<double, double>> terms() const;

 private:
  static std::int64_t key(double e);
  std::map<std::int64_t, double> terms_;  // key -> coefficient
};

/// Correction series G(t) in  ln u(t/2) = ln B + sigma ln t + G(t),
/// determined by (sigma, B, nu) through the differential equation; exponents
/// live on the lattice { j(1-sigma) + k(1+sigma) : j + k >= 1 }.
PowerSeries log_u_corrections(double sigma, double B, double nu, double e_max);

/// Correction series T(t) in  ln(tau(t)/cosh(q(t)/2)) = C + (sigma^2/4) ln t + T(t),
/// derived term by term from log_u_corrections.
PowerSeries log_tau_over_cosh_corrections(double sigma, double B, double nu,
                                          double e_max);

}  // namespace sgtau::series
