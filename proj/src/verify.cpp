#include "sgtau/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "sgtau/connection.hpp"
#include "sgtau/quadrature.hpp"
#include "sgtau/sinh_gordon.hpp"
#include "sgtau/specfun.hpp"
#include "sgtau/tau.hpp"

namespace sgtau::verify {

namespace {

using specfun::constants;

constexpr double kSigmaGrid[] = {0.2, 0.4, 0.6};
constexpr double kNuGrid[] = {-0.2, 0.0, 0.5, 1.0};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string point_label(const ModelParams& p) {
  return "(sigma=" + fmt("%.1f", p.sigma) + ", nu=" + fmt("%.1f", p.nu) + ")";
}

CheckItem make_item(std::string label, double analytic, double observed,
                    double deviation, double tolerance) {
  CheckItem it;
  it.label = std::move(label);
  it.analytic = analytic;
  it.observed = observed;
  it.deviation = deviation;
  it.tolerance = tolerance;
  it.pass = deviation <= tolerance;
  return it;
}

void finish(CriterionResult& c) {
  for (const auto& it : c.items) c.pass = c.pass && it.pass;
}

struct SweepPoint {
  ModelParams params;
  tau::TauEvaluator eval;
  tau::FitResult fit;
};

// Shared sweep over the verification grid; built once on demand.
class Sweep {
 public:
  const std::vector<SweepPoint>& points() {
    if (points_.empty()) build();
    return points_;
  }

 private:
  std::vector<SweepPoint> points_;
  void build() {
    for (double sigma : kSigmaGrid) {
      for (double nu : kNuGrid) {
        const ModelParams params = ModelParams::from_sigma(nu, sigma);
        if (!params.in_connection_region()) continue;
        tau::TauEvaluator eval(params);
        std::vector<tau::TauSample> samples;
        for (int i = 0; i < 15; ++i)
          samples.push_back(eval.sample(0.02 * std::pow(5.0, i / 14.0)));
        tau::FitResult fit =
            tau::fit_connection(eval.trajectory(), samples, {0.01, 0.1});
        points_.push_back({params, std::move(eval), fit});
      }
    }
  }
};

CriterionResult criterion_exponent_law(Sweep& sweep) {
  CriterionResult c;
  c.name = "exponent-law";
  c.description = "fitted sigma from ln u regression over t in [0.01, 0.1]";
  for (const auto& pt : sweep.points()) {
    const double dev = std::abs(pt.fit.sigma_fit - pt.params.sigma);
    c.items.push_back(make_item(point_label(pt.params), pt.params.sigma,
                                pt.fit.sigma_fit, dev, 1e-3));
  }
  finish(c);
  return c;
}

CriterionResult criterion_prefactor_b(Sweep& sweep) {
  CriterionResult c;
  c.name = "prefactor-B";
  c.description = "fitted u-prefactor vs the closed form, relative";
  for (const auto& pt : sweep.points()) {
    const double b = connect::coefficient_B(pt.params.nu, pt.params.sigma);
    const double dev = std::abs(pt.fit.B_fit - b) / std::abs(b);
    c.items.push_back(make_item(point_label(pt.params), b, pt.fit.B_fit, dev, 1e-4));
  }
  finish(c);
  return c;
}

CriterionResult criterion_amplitude_a(Sweep& sweep) {
  CriterionResult c;
  c.name = "amplitude-A";
  c.description = "fitted tau amplitude vs the closed form, relative";
  for (const auto& pt : sweep.points()) {
    const double a = connect::coefficient_A(pt.params.nu, pt.params.lambda);
    const double dev = std::abs(pt.fit.A_fit - a) / a;
    c.items.push_back(make_item(point_label(pt.params), a, pt.fit.A_fit, dev, 1e-3));
  }
  finish(c);
  return c;
}

CriterionResult criterion_tracy() {
  CriterionResult c;
  c.name = "tracy";
  c.description = "amplitude degenerates to the nu = 0 formula as nu -> 0";
  for (double s : {0.05, 0.25, 0.45}) {
    const double lambda =
        connect::sigma_of_lambda(1.0 - 2.0 * s, connect::SigmaMap::inverse);
    const double ratio =
        connect::coefficient_A(1e-8, lambda) / connect::coefficient_A_tracy(lambda);
    c.items.push_back(
        make_item("s=" + fmt("%.2f", s), 1.0, ratio, std::abs(ratio - 1.0), 1e-8));
  }
  finish(c);
  return c;
}

CriterionResult criterion_identities() {
  CriterionResult c;
  c.name = "identities";
  c.description = "exact integral identities at (nu, sigma) = (0.5, 0.4)";
  const ModelParams params = ModelParams::from_sigma(0.5, 0.4);
  tau::TauEvaluator eval(params);
  const tau::LambdaAction s_lambda(params);
  for (double t : {0.05, 0.5, 2.0}) {
    double q, p;
    eval.trajectory().eval(t, q, p);
    const double h_int = eval.integral_H(t);
    const double s_dir = eval.action_direct(t);
    const double sinh2 = eval.integral_sinh2(t);
    const double rhs =
        -t * hamiltonian(t, q, p, params.nu) + s_dir + 4.0 * params.nu * sinh2;
    c.items.push_back(make_item("total-H t=" + fmt("%.2f", t), rhs, h_int,
                                std::abs(h_int - rhs), 1e-6));
    const double s_lam = s_lambda(t);
    c.items.push_back(make_item("action t=" + fmt("%.2f", t), s_dir, s_lam,
                                std::abs(s_lam - s_dir), 1e-7));
    const double nu_term = eval.nu_term(t);
    c.items.push_back(make_item("nu-deriv t=" + fmt("%.2f", t), sinh2,
                                -0.25 * nu_term, std::abs(-0.25 * nu_term - sinh2),
                                1e-6));
  }
  const double closed = tau::gamma_ratio_integral_closed(0.5, 0.4);
  const double direct = tau::gamma_ratio_integral_quadrature(0.5, 0.4);
  c.items.push_back(make_item("gamma-ratio-integral", closed, direct,
                              std::abs(closed - direct), 1e-8));
  finish(c);
  return c;
}

CriterionResult criterion_smallt(Sweep& sweep) {
  CriterionResult c;
  c.name = "small-t";
  c.description = "Hamiltonian and action small-t laws, bound 5 t^{1-sigma}";
  for (const auto& pt : sweep.points()) {
    const double sigma = pt.params.sigma;
    const double s_const = tau::action_smallt_analytic(pt.params);
    for (double t : {0.02, 0.05}) {
      const double bound = 5.0 * std::pow(t, 1.0 - sigma);
      double q, p;
      pt.eval.trajectory().eval(t, q, p);
      const double th = t * hamiltonian(t, q, p, pt.params.nu);
      c.items.push_back(
          make_item("t*H " + point_label(pt.params) + " t=" + fmt("%.2f", t),
                    -0.5 * sigma * sigma, th,
                    std::abs(th + 0.5 * sigma * sigma), bound));
      const double s_t = pt.eval.action_direct(t);
      const double observed = s_t - 0.5 * sigma * sigma * std::log(t);
      c.items.push_back(
          make_item("S " + point_label(pt.params) + " t=" + fmt("%.2f", t),
                    s_const, observed, std::abs(observed - s_const), bound));
    }
  }
  finish(c);
  return c;
}

CriterionResult criterion_larget() {
  CriterionResult c;
  c.name = "large-t";
  c.description = "tau against the two-term large-t expansion, first omitted order";
  const double nu = 0.3, lambda = 0.2;
  tau::TauEvaluator eval(ModelParams::from_lambda(nu, lambda));
  for (double t : {8.0, 10.0, 12.0}) {
    const double te = eval.sample(t).tau;
    const double tl = connect::tau_largetime(t, nu, lambda);
    const double bound = 1e-2 * lambda * lambda * std::exp(-2.0 * t) *
                         std::pow(t, -2.0 * nu - 1.0);
    c.items.push_back(
        make_item("t=" + fmt("%.0f", t), tl, te, std::abs(te - tl), bound));
  }
  finish(c);
  return c;
}

CriterionResult criterion_f2_series() {
  CriterionResult c;
  c.name = "f2-series";
  c.description = "n = 1 series term reproduces tau at small lambda";
  const double f2 = quad::f2(5.0, 0.0);
  const double series = std::exp(-1e-4 * f2);
  const double te = tau::tau_exact(5.0, ModelParams::from_lambda(0.0, 0.01)).tau;
  c.items.push_back(make_item("t=5, nu=0, lambda=0.01", series, te,
                              std::abs(te - series), 1e-8));
  finish(c);
  return c;
}

CriterionResult criterion_wu() {
  CriterionResult c;
  c.name = "wu";
  c.description = "critical-amplitude constants and the scaling-function limit";
  using specfun::ln_barnes_g;
  using specfun::ln_gamma;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double gamma_half = std::exp(ln_gamma(0.5));
  c.items.push_back(make_item("Gamma(1/2)", sqrt_pi, gamma_half,
                              std::abs(gamma_half - sqrt_pi), 1e-11));
  const double lhs = 2.0 * ln_barnes_g(0.5);
  const double rhs =
      3.0 * constants.zeta_prime_m1 - 0.5 * constants.ln_pi + constants.ln2 / 12.0;
  c.items.push_back(make_item("2 ln G(1/2)", rhs, lhs, std::abs(lhs - rhs), 1e-11));
  const double wu = std::exp(3.0 * constants.zeta_prime_m1 + constants.ln2 / 12.0);
  const double gg = std::exp(ln_barnes_g(0.5) + ln_barnes_g(1.5));
  c.items.push_back(make_item("G(1/2) G(3/2)", wu, gg, std::abs(gg - wu), 1e-11));

  // Fitted small-t limit of 2^{-1/8} F-(t), basis {1, t ln^2 t, t ln t, t}.
  connect::IsingScalingFunctions scaling;
  const int n = 25;
  std::vector<double> ones(n), tln2(n), tln(n), tt(n), y(n);
  for (int i = 0; i < n; ++i) {
    const double t = 0.01 * std::pow(10.0, i / (n - 1.0));
    const double lt = std::log(t);
    ones[i] = 1.0;
    tln2[i] = t * lt * lt;
    tln[i] = t * lt;
    tt[i] = t;
    y[i] = std::pow(2.0, -0.125) * scaling(t).first;
  }
  const auto beta = tau::detail::lstsq({ones, tln2, tln, tt}, y);
  const double dev = std::abs(beta[0] - wu) / wu;
  c.items.push_back(make_item("2^{-1/8} lim F-", wu, beta[0], dev, 0.05));
  finish(c);
  return c;
}

CriterionResult criterion_painleve_residual(Sweep& sweep) {
  CriterionResult c;
  c.name = "painleve-residual";
  c.description = "interpolant defect in the Painleve-III form, scaled";
  for (const auto& pt : sweep.points()) {
    const Trajectory& traj = pt.eval.trajectory();
    const double lo = 0.5 * traj.t_min * 1.02;
    const double hi = 0.5 * traj.t0 * 0.98;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = lo * std::pow(hi / lo, i / 19.0);
      const double res = painleve3_residual(traj, t);
      double q, dq, d2q;
      traj.eval_q_derivs(2.0 * t, q, dq, d2q);
      const double upp = (4.0 * dq * dq - 4.0 * d2q) * std::exp(-q);
      const double scaled = std::abs(res) / std::max(1.0, std::abs(upp));
      worst = std::max(worst, scaled);
    }
    c.items.push_back(
        make_item(point_label(pt.params) + " max over 20 pts", 0.0, worst, worst, 1e-8));
  }
  finish(c);
  return c;
}

}  // namespace

std::vector<std::string> criterion_names() {
  return {"exponent-law", "prefactor-B", "amplitude-A",      "tracy",
          "identities",   "small-t",     "large-t",          "f2-series",
          "wu",           "painleve-residual"};
}

VerificationReport run_verification(
    const std::string& filter,
    const std::function<void(const CriterionResult&)>& progress) {
  VerificationReport report;
  Sweep sweep;
  auto want = [&filter](const std::string& name) {
    return filter.empty() || name.find(filter) != std::string::npos;
  };
  auto emit = [&](CriterionResult c) {
    report.all_pass = report.all_pass && c.pass;
    if (progress) progress(c);
    report.criteria.push_back(std::move(c));
  };
  if (want("exponent-law")) emit(criterion_exponent_law(sweep));
  if (want("prefactor-B")) emit(criterion_prefactor_b(sweep));
  if (want("amplitude-A")) emit(criterion_amplitude_a(sweep));
  if (want("tracy")) emit(criterion_tracy());
  if (want("identities")) emit(criterion_identities());
  if (want("small-t")) emit(criterion_smallt(sweep));
  if (want("large-t")) emit(criterion_larget());
  if (want("f2-series")) emit(criterion_f2_series());
  if (want("wu")) emit(criterion_wu());
  if (want("painleve-residual")) emit(criterion_painleve_residual(sweep));
  return report;
}

}  // namespace sgtau::verify
