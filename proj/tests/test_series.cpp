#include <cmath>

#include "doctest.h"
#include "sgtau/connection.hpp"
#include "sgtau/series.hpp"

using namespace sgtau;
using series::PowerSeries;

TEST_CASE("power series arithmetic") {
  PowerSeries a;
  a.add(0.5, 2.0);
  a.add(1.0, -1.0);
  const PowerSeries b = a.times(a, 3.0);
  // (2 t^0.5 - t)^2 = 4 t - 4 t^1.5 + t^2
  CHECK(b.eval(0.3) == doctest::Approx(std::pow(2 * std::sqrt(0.3) - 0.3, 2))
                           .epsilon(1e-14));
  const PowerSeries e = a.exp(6.0);
  CHECK(e.eval(0.1) ==
        doctest::Approx(std::exp(2 * std::sqrt(0.1) - 0.1)).epsilon(1e-10));
}

TEST_CASE("log_u_corrections leading coefficients match the closed forms") {
  // The first two lattice coefficients (after mapping to the t variable and
  // expanding the log) are  -(nu/B)(1-sigma)^{-2}  and  B nu (1+sigma)^{-2}.
  const double sigma = 0.4, nu = 0.5;
  const double B = connect::coefficient_B(nu, sigma);
  const auto G = series::log_u_corrections(sigma, B, nu, 3.0);
  double c_alpha = 0.0, c_beta = 0.0;
  for (const auto& [e, c] : G.terms()) {
    if (std::abs(e - (1.0 - sigma)) < 1e-9) c_alpha = c;
    if (std::abs(e - (1.0 + sigma)) < 1e-9) c_beta = c;
  }
  CHECK(c_alpha == doctest::Approx(-(nu / B) / ((1 - sigma) * (1 - sigma)))
                       .epsilon(1e-12));
  CHECK(c_beta == doctest::Approx(B * nu / ((1 + sigma) * (1 + sigma)))
                      .epsilon(1e-12));
}

TEST_CASE("log_u_corrections vanish at nu = 0 through first order") {
  // At nu = 0 the series starts at 2 alpha, alpha = 1 - sigma, with
  // t-convention coefficient -1/(16 alpha^2 B^2).
  const double sigma = 0.2;
  const double B = connect::coefficient_B(0.0, sigma);
  const auto G = series::log_u_corrections(sigma, B, 0.0, 3.0);
  const double alpha = 1.0 - sigma;
  CHECK(G.min_exponent() == doctest::Approx(2.0 * alpha).epsilon(1e-12));
  double c2a = 0.0;
  for (const auto& [e, c] : G.terms())
    if (std::abs(e - 2.0 * alpha) < 1e-9) c2a = c;
  CHECK(c2a == doctest::Approx(-1.0 / (16.0 * alpha * alpha * B * B)).epsilon(1e-12));
}

TEST_CASE("tau correction series is empty only in the trivial limit") {
  const double sigma = 0.4, nu = 0.5;
  const double B = connect::coefficient_B(nu, sigma);
  const auto T = series::log_tau_over_cosh_corrections(sigma, B, nu, 6.0);
  CHECK(!T.empty());
  CHECK(T.min_exponent() == doctest::Approx(1.0 - sigma).epsilon(1e-12));
}
