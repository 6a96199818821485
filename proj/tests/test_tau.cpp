#include <cmath>
#include <vector>

#include "doctest.h"
#include "sgtau/connection.hpp"
#include "sgtau/errors.hpp"
#include "sgtau/quadrature.hpp"
#include "sgtau/series.hpp"
#include "sgtau/specfun.hpp"
#include "sgtau/tau.hpp"

using namespace sgtau;
using namespace sgtau::tau;

namespace {
const ModelParams kRef = ModelParams::from_sigma(0.5, 0.4);

const TauEvaluator& ref_eval() {
  static const TauEvaluator eval(kRef);
  return eval;
}
}  // namespace

TEST_CASE("lambda = 0 trivial values") {
  const ModelParams p = ModelParams::from_lambda(0.7, 0.0);
  TauEvaluator eval(p);
  CHECK(eval.sample(0.3).tau == 1.0);
  CHECK(eval.tau_direct(2.0) == 1.0);
  CHECK(eval.action_direct(0.5) == 0.0);
  CHECK(eval.nu_term(0.5) == 0.0);
  CHECK(action_S(1.0, p) == 0.0);
}

TEST_CASE("action: lambda-quadrature matches the s-integral") {
  const auto& eval = ref_eval();
  const LambdaAction s_lambda(kRef);
  for (double t : {0.05, 0.5, 2.0}) {
    CHECK(std::abs(s_lambda(t) - eval.action_direct(t)) < 1e-7);
  }
  // reported error estimate is sane
  double est = 0.0;
  const double v = action_S(0.5, kRef, 12, &est);
  CHECK(std::abs(v - eval.action_direct(0.5)) < 1e-7);
  CHECK(est < 1e-6);
  CHECK_THROWS_AS(action_S(0.5, kRef, 4), DomainError);  // n_nodes >= 8
}

TEST_CASE("action boundary behavior") {
  const auto& eval = ref_eval();
  // S(t0) is exponentially small
  CHECK(std::abs(eval.action_direct(eval.trajectory().t0)) < 1e-10);
  // small-t law with the analytic constant
  const double c = action_smallt_analytic(kRef);
  for (double t : {0.02, 0.05}) {
    const double s = eval.action_direct(t);
    CHECK(std::abs(s - 0.5 * 0.16 * std::log(t) - c) <=
          3.0 * std::pow(t, 1.0 - 0.4));
  }
}

TEST_CASE("nu-derivative identity (sinh^2 integral)") {
  const auto& eval = ref_eval();
  for (double t : {0.05, 0.5, 2.0}) {
    double fd_err = 0.0;
    const double term = eval.nu_term(t, &fd_err);
    CHECK(std::abs(-0.25 * term - eval.integral_sinh2(t)) < 1e-6);
    CHECK(fd_err < 1e-5);
  }
  // small-t limit: -2 ln[Gamma(1-s+nu) Gamma(1+s+nu) / Gamma^2(1/2+nu)] + 2 ln(s+nu)
  using specfun::ln_gamma;
  const double s = kRef.s, nu = kRef.nu;
  const double limit = -2.0 * (ln_gamma(1 - s + nu) + ln_gamma(1 + s + nu) -
                               2.0 * ln_gamma(0.5 + nu)) +
                       2.0 * std::log(s + nu);
  const double t = 0.02;
  CHECK(std::abs(eval.nu_term(t) - limit) < 3.0 * std::pow(t, 1.0 - 0.4));
}

TEST_CASE("nu = 0 pipeline skips the nu-term") {
  const ModelParams p = ModelParams::from_sigma(0.0, 0.5);
  TauEvaluator eval(p);
  const TauSample s = eval.sample(0.1);
  CHECK(s.diagnostics.nu_term_skipped);
  CHECK(s.nu_term == 0.0);
  CHECK(s.tau > 0.0);
}

TEST_CASE("total-H identity") {
  const auto& eval = ref_eval();
  for (double t : {0.05, 0.5, 2.0}) {
    double q, p;
    eval.trajectory().eval(t, q, p);
    const double lhs = eval.integral_H(t);
    const double rhs = -t * hamiltonian(t, q, p, kRef.nu) + eval.action_direct(t) +
                       4.0 * kRef.nu * eval.integral_sinh2(t);
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("tau representations agree") {
  const auto& eval = ref_eval();
  for (double t : {0.05, 0.2, 1.0, 4.0, 10.0}) {
    const TauSample s = eval.sample(t);
    CHECK(s.tau > 0.0);
    CHECK(std::abs(s.tau - eval.tau_direct(t)) < 1e-6);
  }
}

TEST_CASE("tau decreases in lambda at fixed t (empirical)") {
  const double t = 0.5;
  double prev = 1.0 + 1e-12;  // lambda = 0 value
  for (double sigma : {0.2, 0.4, 0.6, 0.8}) {
    const ModelParams p = ModelParams::from_sigma(0.3, sigma);
    const double tau_v = TauEvaluator(p).sample(t).tau;
    CHECK(tau_v < prev);
    prev = tau_v;
  }
}

TEST_CASE("series cross-check against f2 at small lambda") {
  const ModelParams p = ModelParams::from_lambda(0.0, 0.01);
  TauEvaluator eval(p);
  const double tau_v = eval.sample(5.0).tau;
  const double f2 = quad::f2(5.0, 0.0);
  CHECK(std::abs(tau_v - std::exp(-1e-4 * f2)) < 1e-8);
  // the relative statement is much stronger: ln tau = -lambda^2 f2 + O(lambda^4)
  CHECK(std::abs(std::log(tau_v) + 1e-4 * f2) < 1e-3 * std::abs(1e-4 * f2));
}

TEST_CASE("large-t consistency of f2 with the tau expansion") {
  // At nu = 0 the expansion of 1 - lambda^2 f2 matches tau_largetime through
  // the displayed orders; at nu != 0 they agree at the leading order scale.
  const double t = 9.0;
  const double f2_0 = quad::f2(t, 0.0);
  const double lam = 0.1;
  const double lhs = 1.0 - lam * lam * f2_0;
  const double rhs = connect::tau_largetime(t, 0.0, lam);
  CHECK(std::abs(lhs - rhs) <
        0.5 * lam * lam * std::exp(-2.0 * t) * std::pow(t, -3.0));
  const double f2_3 = quad::f2(t, 0.3);
  CHECK(std::abs((1.0 - lam * lam * f2_3) - connect::tau_largetime(t, 0.3, lam)) <
        0.5 * lam * lam * std::exp(-2.0 * t) * std::pow(t, -2.0 * 0.3 - 1.0));
}

TEST_CASE("power-law regression recovers exact input") {
  std::vector<double> ts, us;
  const double B = 1.37, sigma = 0.55;
  for (int i = 0; i < 20; ++i) {
    const double t = 0.01 * std::pow(10.0, i / 19.0);
    ts.push_back(t);
    us.push_back(B * std::pow(t, sigma));
  }
  FitOptions opt;
  opt.corrections = false;  // data generated without lattice corrections
  const PowerLawFit fit = fit_u_samples(ts, us, 0.8, opt);
  CHECK(std::abs(fit.sigma - sigma) < 1e-12);
  CHECK(std::abs(fit.B - B) < 1e-12);
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("correction-aware fit recovers its own model") {
  const double B = 1.8233055892156704, sigma = 0.4, nu = 0.5;
  const auto G = series::log_u_corrections(sigma, B, nu, 10.0);
  std::vector<double> ts, us;
  for (int i = 0; i < 25; ++i) {
    const double t = 0.01 * std::pow(10.0, i / 24.0);
    ts.push_back(t);
    us.push_back(B * std::pow(t, sigma) * std::exp(G.eval(t)));
  }
  const PowerLawFit fit = fit_u_samples(ts, us, nu);
  CHECK(std::abs(fit.sigma - sigma) < 1e-9);
  CHECK(std::abs(fit.B - B) / B < 1e-9);
}

TEST_CASE("fit_connection window guards") {
  const auto& traj = ref_eval().trajectory();
  CHECK_THROWS_AS(fit_connection(traj, {}, {0.05, 0.3}), DomainError);   // hi > 0.2
  CHECK_THROWS_AS(fit_connection(traj, {}, {0.05, 0.1}), DomainError);   // < half decade
  CHECK_THROWS_AS(fit_connection(traj, {}, {0.001, 0.1}), DomainError);  // below t_min
}

TEST_CASE("fit_connection on the reference point") {
  const auto& eval = ref_eval();
  std::vector<TauSample> samples;
  for (int i = 0; i < 15; ++i)
    samples.push_back(eval.sample(0.02 * std::pow(5.0, i / 14.0)));
  const FitResult fit = fit_connection(eval.trajectory(), samples, {0.01, 0.1});
  CHECK(std::abs(fit.sigma_fit - 0.4) < 1e-4);
  CHECK(std::abs(fit.B_fit - connect::coefficient_B(0.5, 0.4)) /
            connect::coefficient_B(0.5, 0.4) <
        1e-4);
  CHECK(std::abs(fit.A_fit - connect::coefficient_A(0.5, kRef.lambda)) /
            connect::coefficient_A(0.5, kRef.lambda) <
        1e-3);
  CHECK(fit.residual < 1e-4);

  // Exponent relation: the fitted log-slope of tau matches sigma(sigma-2)/4.
  // Split as ln tau = [ln tau - ln cosh(q/2)] + [ln cosh(q/2)]; the first has
  // slope sigma^2/4 after the correction series, the second slope -sigma/2
  // after removing its own measured structure.
  const auto T = series::log_tau_over_cosh_corrections(fit.sigma_fit, fit.B_fit,
                                                       kRef.nu, 10.0);
  const auto G = series::log_u_corrections(fit.sigma_fit, fit.B_fit, kRef.nu, 10.0);
  std::vector<double> ones, lt, y1, y2;
  for (const auto& s : samples) {
    const double q = eval.trajectory().q(s.t);
    const double w = std::exp(-q);
    ones.push_back(1.0);
    lt.push_back(std::log(s.t));
    y1.push_back(std::log(s.tau) - std::log(std::cosh(0.5 * q)) - T.eval(s.t));
    y2.push_back(std::log(std::cosh(0.5 * q)) + 0.5 * G.eval(s.t) -
                 std::log1p(w));
  }
  const double slope1 = detail::lstsq({ones, lt}, y1)[1];
  const double slope2 = detail::lstsq({ones, lt}, y2)[1];
  CHECK(std::abs(slope1 + slope2 - connect::exponent_tau(kRef)) < 1e-3);
}

TEST_CASE("scaling functions") {
  using connect::scaling_functions;
  // large t: F+/F- = tanh(q/2) -> 0
  const auto [fm_big, fp_big] = scaling_functions(8.0);
  CHECK(std::abs(fp_big / fm_big) < 1e-5);
  // small t: the ratio approaches 1
  const auto [fm, fp] = scaling_functions(0.05);
  CHECK(fp / fm > 0.99);
  CHECK(fm > 0.0);
}
