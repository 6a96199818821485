#include "sgtau/sinh_gordon.hpp"

#include <algorithm>
#include <cmath>

#include "sgtau/quadrature.hpp"
#include "sgtau/specfun.hpp"

namespace sgtau {

std::pair<double, double> initial_conditions(double t0, const ModelParams& params) {
  if (!(t0 > 0.0)) throw DomainError("initial_conditions: need t0 > 0");
  if (params.lambda == 0.0) return {0.0, 0.0};
  const double w = quad::watson_integral(t0, params.nu);
  const double wt = quad::watson_integral_dt(t0, params.nu);
  return {2.0 * params.lambda * w, -t0 * 2.0 * params.lambda * wt};
}

double choose_t0(const ModelParams& params) {
  double t0 = defaults::t0_floor;
  for (int i = 0; i < 32; ++i) {
    const double q0 = 2.0 * params.lambda * quad::watson_integral(t0, params.nu);
    if (q0 * q0 < 1e-14) return t0;
    t0 *= 1.25;
  }
  throw SolverError("choose_t0: no adequate start time found", t0);
}

std::vector<Trajectory::Node> Trajectory::nodes() const {
  std::vector<Node> out;
  if (zero_) {
    out.push_back({t0, 0.0, 0.0});
    out.push_back({t_min, 0.0, 0.0});
    return out;
  }
  out.reserve(steps_.size() + 1);
  // steps_ ascend in x; integration ran downward, so emit right-to-left.
  const auto& last = steps_.back();
  out.push_back({std::exp(last.x_from), last.value(0, 0.0), last.value(1, 0.0)});
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    out.push_back({std::exp(it->x_from + it->h), it->value(0, 1.0), it->value(1, 1.0)});
  return out;
}

const ode::DenseStep& Trajectory::locate(double x) const {
  // Steps ascend by left edge x_from + h (h < 0 during backward integration).
  const double eps = 1e-12 * std::max(1.0, std::abs(x));
  auto lo = steps_.begin(), hi = steps_.end();
  while (hi - lo > 1) {
    auto mid = lo + (hi - lo) / 2;
    const double left = std::min(mid->x_from, mid->x_from + mid->h);
    if (x >= left)
      lo = mid;
    else
      hi = mid;
  }
  const double left = std::min(lo->x_from, lo->x_from + lo->h);
  const double right = std::max(lo->x_from, lo->x_from + lo->h);
  if (x < left - eps || x > right + eps)
    throw DomainError("Trajectory: evaluation outside [t_min, t0], t = " +
                      std::to_string(std::exp(x)));
  return *lo;
}

void Trajectory::eval(double t, double& qv, double& pv) const {
  if (zero_) {
    qv = pv = 0.0;
    return;
  }
  const double x = std::log(t);
  const auto& st = locate(x);
  const double th = st.theta(x);
  qv = st.value(0, th);
  pv = st.value(1, th);
}

double Trajectory::q(double t) const {
  double qv, pv;
  eval(t, qv, pv);
  return qv;
}

double Trajectory::p(double t) const {
  double qv, pv;
  eval(t, qv, pv);
  return pv;
}

void Trajectory::eval_q_derivs(double t, double& qv, double& dq, double& d2q) const {
  if (zero_) {
    qv = dq = d2q = 0.0;
    return;
  }
  const double x = std::log(t);
  const auto& st = locate(x);
  const double th = st.theta(x);
  qv = st.value(0, th);
  const double qx = st.deriv(0, th);    // dq/dx
  const double qxx = st.deriv2(0, th);  // d2q/dx2
  dq = qx / t;
  d2q = (qxx - qx) / (t * t);
}

Trajectory solve_backward(const ModelParams& params, double t0, double t_min,
                          double tol) {
  if (t0 <= 0.0) t0 = choose_t0(params);
  if (!(t_min > 0.0) || !(t_min < t0))
    throw DomainError("solve_backward: need 0 < t_min < t0");
  if (!(tol > 0.0)) throw DomainError("solve_backward: need tol > 0");
  if (t_min < 1e-3 && params.sigma > 0.9)
    throw DomainError(
        "solve_backward: t_min below 1e-3 with sigma near 1 is refused; the "
        "small-t error terms O(t^{1-sigma}) degrade there");

  Trajectory traj;
  traj.params = params;
  traj.t0 = t0;
  traj.t_min = t_min;
  traj.tol = tol;
  if (!params.in_connection_region())
    traj.warnings.push_back(
        "sigma >= 1 + 2 nu: outside the connection region, raw integration only");

  if (params.lambda == 0.0) {
    traj.zero_ = true;
    return traj;
  }

  const auto [q0, p0] = initial_conditions(t0, params);
  if (q0 * q0 > 1e-12)
    traj.warnings.push_back(
        "neglected boundary corrections exceed 1e-12 (q0^2 = " +
        std::to_string(q0 * q0) + "); increase t0");

  // Integrate in x = ln t: dq/dx = -p, dp/dx = -(t^2/2) sinh 2q - 2 nu t sinh q.
  const double nu = params.nu;
  auto rhs = [nu](double x, const ode::State& y, ode::State& dy) {
    const double t = std::exp(x);
    dy[0] = -y[1];
    dy[1] = -0.5 * t * t * std::sinh(2.0 * y[0]) - 2.0 * nu * t * std::sinh(y[0]);
  };
  ode::OdeSolution sol;
  try {
    sol = ode::integrate_dopri5(rhs, std::log(t0), std::log(t_min), {q0, p0}, tol);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " (sinh-Gordon backward solve)",
                      std::exp(e.t_at_failure));
  }
  traj.steps_ = std::move(sol.steps);
  std::reverse(traj.steps_.begin(), traj.steps_.end());
  return traj;
}

Trajectory Trajectory::solve(const ModelParams& params, double t0, double t_min,
                             double tol) {
  return solve_backward(params, t0, t_min, tol);
}

double painleve3_residual(const Trajectory& traj, double t) {
  if (traj.identically_zero()) return 0.0;
  // u's argument is half the psi argument: u(t) = e^{-q(2t)}.
  double q, dq, d2q;
  traj.eval_q_derivs(2.0 * t, q, dq, d2q);
  const double w1 = 2.0 * dq;    // d/dt q(2t)
  const double w2 = 4.0 * d2q;   // d2/dt2 q(2t)
  const double u = std::exp(-q);
  const double up = -w1 * u;
  const double upp = (w1 * w1 - w2) * u;
  const double nu = traj.params.nu;
  const double rhs = up * up / u - up / t + (2.0 * nu / t) * (u * u - 1.0) +
                     u * u * u - 1.0 / u;
  return upp - rhs;
}

TailEstimates boundary_tails(const ModelParams& params, double t0) {
  TailEstimates te;
  if (params.lambda == 0.0) return te;
  const double c = 2.0 * params.lambda *
                   std::exp(specfun::ln_gamma(params.nu + 0.5) -
                            (params.nu + 0.5) * specfun::constants.ln2);
  const double e2 = std::exp(-2.0 * t0);
  const double tp = std::pow(t0, -2.0 * params.nu);
  te.action = -0.5 * c * c * e2 * tp;
  te.hamiltonian = -0.25 * c * c * e2 * tp / t0;
  te.sinh2 = 0.125 * c * c * e2 * tp / t0;
  return te;
}

}  // namespace sgtau
