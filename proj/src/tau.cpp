#include "sgtau/tau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgtau/quadrature.hpp"
#include "sgtau/series.hpp"
#include "sgtau/specfun.hpp"

namespace sgtau::tau {

namespace {

double action_integrand(double s, double q, double p, double nu) {
  // p dq/ds - H = -p^2/(2s) - (s/2) sinh^2 q - 4 nu sinh^2(q/2)
  const double sh = std::sinh(q);
  const double s2 = std::sinh(0.5 * q);
  return -0.5 * p * p / s - 0.5 * s * sh * sh - 4.0 * nu * s2 * s2;
}

}  // namespace

namespace detail {

// Normal equations with partial pivoting; ample at these sizes and conditionings.
std::vector<double> lstsq(const std::vector<std::vector<double>>& cols,
                          const std::vector<double>& y) {
  const std::size_t n = cols.size(), m = y.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < m; ++k) s += cols[i][k] * cols[j][k];
      a[i][j] = a[j][i] = s;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += cols[i][k] * y[k];
    a[i][n] = s;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = i;
    for (std::size_t r = i + 1; r < n; ++r)
      if (std::abs(a[r][i]) > std::abs(a[piv][i])) piv = r;
    std::swap(a[i], a[piv]);
    if (a[i][i] == 0.0) throw DomainError("lstsq: singular normal equations");
    for (std::size_t r = i + 1; r < n; ++r) {
      const double f = a[r][i] / a[i][i];
      for (std::size_t c = i; c <= n; ++c) a[r][c] -= f * a[i][c];
    }
  }
  std::vector<double> beta(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * beta[j];
    beta[i] = s / a[i][i];
  }
  return beta;
}

}  // namespace detail

namespace {

using detail::lstsq;

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1.0));
  return v;
}

}  // namespace

// --- TauEvaluator ---

TauEvaluator::TauEvaluator(const ModelParams& params, TauOptions opt)
    : params_(params), opt_(opt) {
  base_ = solve_backward(params_, opt_.t0, opt_.t_min, opt_.tol);
  opt_.t0 = base_.t0;
  if (params_.nu != 0.0 && params_.lambda != 0.0) {
    if (params_.nu - opt_.h_nu <= -0.5)
      throw DomainError("TauEvaluator: nu - h_nu reaches the boundary -1/2");
    const double h = opt_.h_nu;
    const double shifts[4] = {h, -h, 0.5 * h, -0.5 * h};
    for (int i = 0; i < 4; ++i) {
      ModelParams p = ModelParams::from_lambda(params_.nu + shifts[i], params_.lambda);
      probes_[i] = solve_backward(p, base_.t0, opt_.t_min, opt_.tol);
    }
    have_probes_ = true;
  }
}

double TauEvaluator::action_on(const Trajectory& traj, double t) const {
  const double nu = traj.params.nu;
  const double body = traj.integrate_along(
      t, traj.t0, [nu](double s, double q, double p) {
        return action_integrand(s, q, p, nu);
      });
  return body + boundary_tails(traj.params, traj.t0).action;
}

double TauEvaluator::action_direct(double t) const { return action_on(base_, t); }

double TauEvaluator::integral_H(double t) const {
  const double nu = params_.nu;
  const double body = base_.integrate_along(t, base_.t0, [nu](double s, double q, double p) {
    return hamiltonian(s, q, p, nu);
  });
  return body + boundary_tails(params_, base_.t0).hamiltonian;
}

double TauEvaluator::integral_sinh2(double t) const {
  const double body = base_.integrate_along(t, base_.t0, [](double, double q, double) {
    const double s2 = std::sinh(0.5 * q);
    return s2 * s2;
  });
  return body + boundary_tails(params_, base_.t0).sinh2;
}

double TauEvaluator::nu_term(double t, double* fd_error) const {
  if (fd_error) *fd_error = 0.0;
  if (!have_probes_) return 0.0;
  const double h = opt_.h_nu;
  // q-differences
  const double dq_h = (probes_[0].q(t) - probes_[1].q(t)) / (2.0 * h);
  const double dq_h2 = (probes_[2].q(t) - probes_[3].q(t)) / h;
  const double dq = (4.0 * dq_h2 - dq_h) / 3.0;
  // S-differences
  const double dS_h = (action_on(probes_[0], t) - action_on(probes_[1], t)) / (2.0 * h);
  const double dS_h2 = (action_on(probes_[2], t) - action_on(probes_[3], t)) / h;
  const double dS = (4.0 * dS_h2 - dS_h) / 3.0;
  if (fd_error)
    *fd_error = (std::abs(dq_h2 - dq_h) + std::abs(dS_h2 - dS_h)) / 3.0;
  return base_.p(t) * dq + dS;
}

TauSample TauEvaluator::sample(double t) const {
  TauSample s;
  s.t = t;
  s.params = params_;
  if (params_.lambda == 0.0) return s;  // tau = 1 exactly
  double q, p;
  base_.eval(t, q, p);
  s.H_t = hamiltonian(t, q, p, params_.nu);
  s.S_t = action_direct(t);
  s.diagnostics.action_tail = boundary_tails(params_, base_.t0).action;
  double expo = -0.5 * t * s.H_t + 0.5 * s.S_t;
  if (params_.nu != 0.0) {
    s.nu_term = nu_term(t, &s.diagnostics.nu_fd_error);
    expo -= 0.25 * params_.nu * s.nu_term;
  } else {
    s.diagnostics.nu_term_skipped = true;
  }
  s.tau = std::exp(expo) * std::cosh(0.5 * q);
  return s;
}

double TauEvaluator::tau_direct(double t) const {
  if (params_.lambda == 0.0) return 1.0;
  const double expo =
      0.5 * integral_H(t) - params_.nu * integral_sinh2(t);
  return std::exp(expo) * std::cosh(0.5 * base_.q(t));
}

TauSample tau_exact(double t, const ModelParams& params, TauOptions opt) {
  return TauEvaluator(params, opt).sample(t);
}

// --- lambda-representation of the action ---

LambdaAction::LambdaAction(const ModelParams& params, int n_nodes, TauOptions opt) {
  if (n_nodes < 8) throw DomainError("LambdaAction: need n_nodes >= 8");
  if (params.lambda == 0.0) return;
  const double h = defaults::fd_step_lambda;
  const double t0 = opt.t0 > 0.0 ? opt.t0 : choose_t0(params);
  nodes_.reserve(n_nodes);
  for (const auto& [x, w] : quad::gauss_legendre(n_nodes)) {
    Node node;
    node.weight = 0.5 * params.lambda * w;
    const double lp = 0.5 * params.lambda * (x + 1.0);
    auto at = [&](double lam) {
      return solve_backward(ModelParams::from_lambda(params.nu, lam), t0,
                            opt.t_min, opt.tol);
    };
    node.base = at(lp);
    node.fd = {at(lp + h), at(lp - h), at(lp + 0.5 * h), at(lp - 0.5 * h)};
    nodes_.push_back(std::move(node));
  }
}

double LambdaAction::operator()(double t) const {
  const double h = defaults::fd_step_lambda;
  double total = 0.0;
  for (const auto& node : nodes_) {
    const double d1 = (node.fd[0].q(t) - node.fd[1].q(t)) / (2.0 * h);
    const double d2 = (node.fd[2].q(t) - node.fd[3].q(t)) / h;
    const double dq = (4.0 * d2 - d1) / 3.0;
    total -= node.weight * node.base.p(t) * dq;
  }
  return total;
}

double action_S(double t, const ModelParams& params, int n_nodes,
                double* error_estimate, TauOptions opt) {
  const LambdaAction main(params, n_nodes, opt);
  const double v = main(t);
  if (error_estimate) {
    const LambdaAction coarse(params, std::max(8, n_nodes - 3), opt);
    *error_estimate = std::abs(v - coarse(t));
  }
  return v;
}

// --- analytic small-t action ---

double action_smallt_analytic(const ModelParams& params) {
  using specfun::constants;
  using specfun::ln_barnes_g;
  using specfun::ln_gamma;
  const double nu = params.nu, sigma = params.sigma, s = params.s;
  if (!params.in_connection_region())
    throw DomainError("action_smallt_analytic: hypothesis s + nu > 0 violated");
  if (!(sigma > 0.0 && sigma < 1.0))
    throw DomainError("action_smallt_analytic: need sigma in (0,1)");
  return -1.5 * sigma * sigma * constants.ln2 - 0.5 * sigma * sigma +
         6.0 * constants.zeta_prime_m1 + constants.ln2 / 6.0 +
         2.0 * (ln_barnes_g(1.0 - s + nu) + ln_barnes_g(1.0 + s + nu) -
                2.0 * ln_barnes_g(1.0 - s) - 2.0 * ln_barnes_g(1.0 + s)) +
         2.0 * (2.0 * ln_barnes_g(0.5) + ln_gamma(0.5) -
                2.0 * ln_barnes_g(0.5 + nu) - ln_gamma(0.5 + nu)) +
         2.0 * ln_gamma(s) - 2.0 * ln_gamma(1.0 - s) + ln_gamma(1.0 - s + nu) -
         ln_gamma(1.0 + s + nu) -
         2.0 * nu * (ln_gamma(1.0 - s + nu) + ln_gamma(1.0 + s + nu) -
                     2.0 * ln_gamma(0.5 + nu)) +
         (1.0 + 2.0 * nu) * std::log(s + nu);
}

double gamma_ratio_integral_closed(double nu, double sigma) {
  using specfun::ln_barnes_g;
  using specfun::ln_gamma;
  const double s = 0.5 * (1.0 - sigma);
  if (!(s + nu > 0.0))
    throw DomainError("gamma_ratio_integral_closed: need s + nu > 0");
  return 0.5 * sigma * sigma +
         2.0 * (ln_barnes_g(1.0 - s + nu) + ln_barnes_g(1.0 + s + nu) -
                2.0 * ln_barnes_g(0.5 + nu)) +
         (1.0 - 2.0 * nu) * (ln_gamma(1.0 - s + nu) + ln_gamma(1.0 + s + nu) -
                             2.0 * ln_gamma(0.5 + nu)) -
         2.0 * ln_gamma(1.0 + s + nu) + (1.0 + 2.0 * nu) * std::log(s + nu);
}

double gamma_ratio_integral_quadrature(double nu, double sigma) {
  auto f = [nu](double sg) {
    return 0.5 * sg *
           (specfun::digamma(nu + 0.5 * (1.0 + sg)) +
            specfun::digamma(nu + 0.5 * (1.0 - sg)));
  };
  quad::QuadSettings st;
  st.rel_tol = 1e-13;
  return quad::integrate(f, 0.0, sigma, st).value;
}

// --- fits ---

PowerLawFit fit_u_samples(std::span<const double> ts, std::span<const double> us,
                          double nu, const FitOptions& opt) {
  if (ts.size() != us.size() || ts.size() < 4)
    throw DomainError("fit_u_samples: need matching sample arrays, >= 4 points");
  const std::size_t m = ts.size();
  std::vector<double> lt(m), lu(m);
  for (std::size_t i = 0; i < m; ++i) {
    lt[i] = std::log(ts[i]);
    lu[i] = std::log(us[i]);
  }
  std::vector<double> ones(m, 1.0);
  std::vector<double> y = lu;
  PowerLawFit fit;
  double prev_sigma = -1.0, prev_lnB = 0.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const auto beta = lstsq({ones, lt}, y);
    fit.B = std::exp(beta[0]);
    fit.sigma = beta[1];
    if (!opt.corrections) break;
    if (std::abs(fit.sigma - prev_sigma) < 1e-13 &&
        std::abs(beta[0] - prev_lnB) < 1e-13)
      break;
    prev_sigma = fit.sigma;
    prev_lnB = beta[0];
    const double sg = std::clamp(fit.sigma, 0.005, 0.975);
    const series::PowerSeries G =
        series::log_u_corrections(sg, fit.B, nu, opt.series_order);
    for (std::size_t i = 0; i < m; ++i) y[i] = lu[i] - G.eval(ts[i]);
  }
  double res = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    res = std::max(res, std::abs(y[i] - std::log(fit.B) - fit.sigma * lt[i]));
  fit.residual = res;
  return fit;
}

FitResult fit_connection(const Trajectory& traj, std::span<const TauSample> tau_series,
                         std::pair<double, double> window, const FitOptions& opt) {
  const auto [lo, hi] = window;
  if (!(lo > 0.0) || !(hi > lo))
    throw DomainError("fit_connection: bad window");
  if (hi > 0.2 + 1e-12)
    throw DomainError("fit_connection: window upper bound must be <= 0.2");
  if (lo < traj.t_min * (1.0 - 1e-12) || hi > traj.t0)
    throw DomainError("fit_connection: window outside the trajectory range");
  if (hi / lo < 3.16227766)  // half a decade
    throw DomainError("fit_connection: window narrower than half a decade");

  FitResult out;
  out.t_window = window;
  const double nu = traj.params.nu;

  const auto ts = log_spaced(lo, hi, opt.n_samples);
  std::vector<double> us(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) us[i] = std::exp(-traj.q(ts[i]));
  const PowerLawFit ufit = fit_u_samples(ts, us, nu, opt);
  out.sigma_fit = ufit.sigma;
  out.B_fit = ufit.B;
  out.residual = ufit.residual;

  if (!tau_series.empty()) {
    const double sg = std::clamp(ufit.sigma, 0.005, 0.975);
    const series::PowerSeries T = opt.corrections
        ? series::log_tau_over_cosh_corrections(sg, ufit.B, nu, opt.series_order)
        : series::PowerSeries{};
    std::vector<double> ones, ltau, y;
    for (const TauSample& s : tau_series) {
      if (s.t < lo * (1.0 - 1e-12) || s.t > hi * (1.0 + 1e-12)) continue;
      const double q = traj.q(s.t);
      ones.push_back(1.0);
      ltau.push_back(std::log(s.t));
      y.push_back(std::log(s.tau) - std::log(std::cosh(0.5 * q)) - T.eval(s.t));
    }
    if (y.size() < 3)
      throw DomainError("fit_connection: too few tau samples in the window");
    const auto beta = lstsq({ones, ltau}, y);
    // ln(tau/cosh) = C + (sigma^2/4) ln t + ...  and  A = e^C / (2 sqrt(B)).
    out.A_fit = std::exp(beta[0]) / (2.0 * std::sqrt(ufit.B));
    for (std::size_t i = 0; i < y.size(); ++i)
      out.residual = std::max(out.residual,
                              std::abs(y[i] - beta[0] - beta[1] * ltau[i]));
  }
  return out;
}

}  // namespace sgtau::tau
