#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sgtau/connection.hpp"
#include "sgtau/errors.hpp"
#include "sgtau/specfun.hpp"

using namespace sgtau;
using namespace sgtau::connect;
using specfun::constants;

TEST_CASE("sigma <-> lambda") {
  CHECK(sigma_of_lambda(0.0, SigmaMap::forward) == 0.0);
  CHECK(sigma_of_lambda(1.0 / std::numbers::pi, SigmaMap::forward) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sigma_of_lambda(0.5 / std::numbers::pi, SigmaMap::forward) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(sigma_of_lambda(0.5, SigmaMap::forward), DomainError);
  CHECK_THROWS_AS(sigma_of_lambda(1.0001, SigmaMap::inverse), DomainError);
  // mutual inverses to 1e-14 on lambda*pi in [0, 0.999]
  for (int i = 0; i <= 200; ++i) {
    const double lambda = 0.999 * i / 200.0 / std::numbers::pi;
    const double back = sigma_of_lambda(
        sigma_of_lambda(lambda, SigmaMap::forward), SigmaMap::inverse);
    CHECK(std::abs(back - lambda) <= 1e-14);
  }
}

TEST_CASE("coefficient_B") {
  // sigma = 0 forces every factor to 1
  CHECK(coefficient_B(0.7, 0.0) == 1.0);
  CHECK(coefficient_B(-0.3, 0.0) == 1.0);
  // value pinned by an independent evaluation of the same closed form
  CHECK(coefficient_B(0.5, 0.4) == doctest::Approx(1.8233055892156704).epsilon(1e-13));
  // sign: negative exactly when sigma > 1 + 2 nu
  for (double nu : {-0.45, -0.3, -0.1, 0.2})
    for (double sigma : {0.05, 0.3, 0.55, 0.8, 0.95}) {
      if (std::abs(sigma - (1 + 2 * nu)) < 1e-12) continue;
      const double b = coefficient_B(nu, sigma);
      if (sigma > 1 + 2 * nu)
        CHECK(b < 0.0);
      else
        CHECK(b > 0.0);
    }
  CHECK_THROWS_AS(coefficient_B(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(coefficient_B(-0.2, 0.6), DomainError);  // pole: nu + s = 0
}

TEST_CASE("u_smallt") {
  // lambda = 0: sigma = 0, B = 1 and the two corrections cancel identically
  CHECK(u_smallt(0.05, 0.8, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  // nu = 0: pure power law
  for (double t : {0.01, 0.05}) {
    const auto p = ModelParams::from_sigma(0.0, 0.3);
    CHECK(u_smallt(t, 0.0, p.lambda) ==
          doctest::Approx(coefficient_B(0.0, 0.3) * std::pow(t, 0.3)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(u_smallt(0.05, -0.2, ModelParams::from_sigma(-0.2, 0.8).lambda),
                  DomainError);
}

TEST_CASE("c_of_nu and u_degenerate") {
  CHECK(c_of_nu(0.0) == 1.0);
  CHECK(c_of_nu(1.0) == doctest::Approx(2.0044517535566061).epsilon(1e-13));
  // digamma recurrence route: psi(2) = 1 - gamma
  const double c1 = 1.0 + 2.0 * (3.0 * constants.ln2 - 2.0 * constants.euler_gamma -
                                 (1.0 - constants.euler_gamma));
  CHECK(c_of_nu(1.0) == doctest::Approx(c1).epsilon(1e-14));
  // nu = 0 value: (t/2)(-ln t + 3 ln 2 - gamma_E)
  const double t = 0.05;
  CHECK(u_degenerate(t, 0.0) ==
        doctest::Approx(0.5 * t *
                        (-std::log(t) + 3.0 * constants.ln2 - constants.euler_gamma))
            .epsilon(1e-14));
  // continuity of the removable nu -> 0 limit
  CHECK(std::abs(u_degenerate(0.05, 1e-8) / u_degenerate(0.05, 0.0) - 1.0) < 1e-6);
}

TEST_CASE("coefficient_A and the Tracy formula") {
  // s = 0: A = e^{3 zeta'(-1) - (1/6) ln 2}
  const double a0 = std::exp(3.0 * constants.zeta_prime_m1 - constants.ln2 / 6.0);
  CHECK(coefficient_A_tracy(1.0 / std::numbers::pi) ==
        doctest::Approx(a0).epsilon(1e-13));
  CHECK(std::abs(a0 - 0.54238024678157197) < 1e-14);
  // s = 0.25 pinned independently
  const double lam_half = sigma_of_lambda(0.5, SigmaMap::inverse);
  CHECK(coefficient_A_tracy(lam_half) ==
        doctest::Approx(0.52690190960842924).epsilon(1e-12));
  // s = 0.49: finite and positive
  CHECK(coefficient_A_tracy(sigma_of_lambda(0.02, SigmaMap::inverse)) > 0.0);
  // nu -> 0 degeneration at several s
  for (double s : {0.1, 0.25, 0.4}) {
    const double lam = sigma_of_lambda(1.0 - 2.0 * s, SigmaMap::inverse);
    CHECK(std::abs(coefficient_A(1e-8, lam) / coefficient_A_tracy(lam) - 1.0) < 1e-8);
  }
  // value at (nu, sigma) = (0.5, 0.4) pinned by an independent evaluation
  const auto p = ModelParams::from_sigma(0.5, 0.4);
  CHECK(coefficient_A(0.5, p.lambda) ==
        doctest::Approx(0.41813598376294471).epsilon(1e-12));
  // hypothesis guard
  CHECK_THROWS_AS(coefficient_A(-0.4, ModelParams::from_sigma(-0.4, 0.9).lambda),
                  DomainError);
}

TEST_CASE("A positivity and continuity on the admissible grid") {
  double prev = -1.0;
  for (int i = 0; i < 20; ++i) {
    const double nu = -0.3 + 2.3 * i / 19.0;
    prev = -1.0;
    for (int j = 0; j < 20; ++j) {
      const double sigma = 0.05 + 0.9 * j / 19.0;
      const ModelParams p = ModelParams::from_sigma(nu, sigma);
      if (p.s + nu <= 1e-3) continue;
      const double a = (nu == 0.0) ? coefficient_A_tracy(p.lambda)
                                   : coefficient_A(nu, p.lambda);
      CHECK(a > 0.0);
      CHECK(std::isfinite(a));
      if (prev > 0.0) CHECK(std::abs(std::log(a / prev)) < 1.0);
      prev = a;
    }
  }
}

TEST_CASE("Tracy degeneration is linear in nu") {
  const double lam = sigma_of_lambda(0.5, SigmaMap::inverse);
  const double a0 = coefficient_A_tracy(lam);
  double max_ratio = 0.0;
  for (double nu : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
    const double d = std::abs(coefficient_A(nu, lam) - a0);
    max_ratio = std::max(max_ratio, d / nu);
  }
  CHECK(max_ratio < 10.0);  // |A(nu) - A(0)| <= C nu with a modest C
}

TEST_CASE("tau_largetime") {
  CHECK(tau_largetime(7.0, 0.9, 0.0) == 1.0);
  // nu = 0 reduction keeps only the 1/t part of the braces
  const double t = 10.0, lam = 0.15;
  const double expect = 1.0 + 0.5 * lam * lam * (std::numbers::pi / (2 * t)) *
                                  std::exp(-2 * t) * 0.5 / t;
  CHECK(tau_largetime(t, 0.0, lam) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("exponents") {
  const auto p = ModelParams::from_sigma(0.5, 0.4);
  CHECK(exponent_u(p) == 0.4);
  CHECK(exponent_tau(p) == doctest::Approx(0.4 * (0.4 - 2.0) / 4.0).epsilon(1e-15));
}
