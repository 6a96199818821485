#pragma once

// Backward integration of the Hamiltonian system
//   dq/dt = -p/t,   dp/dt = -(t/2) sinh(2q) - 2 nu sinh(q),
//   H(q, p, t, nu) = (t/2) sinh^2 q - p^2/(2t) + 4 nu sinh^2(q/2),
// from boundary data q ~ 2 lambda W(t, nu) at large t.  Eliminating p gives
// q'' + q'/t = (1/2) sinh(2q) + (2 nu / t) sinh q, and u(t) = e^{-q(2t)}
// solves the Painleve-III equation with parameters (2nu, -2nu, 1, -1).

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sgtau/constants.hpp"
#include "sgtau/errors.hpp"
#include "sgtau/ode.hpp"
#include "sgtau/params.hpp"

namespace sgtau {

/// Right-hand side of Hamilton's equations at (t, q, p).
inline std::pair<double, double> hamilton_rhs(double t, double q, double p, double nu) {
  if (!(t > 0.0)) throw DomainError("hamilton_rhs: need t > 0");
  return {-p / t, -0.5 * t * std::sinh(2.0 * q) - 2.0 * nu * std::sinh(q)};
}

inline double hamiltonian(double t, double q, double p, double nu) {
  if (!(t > 0.0)) throw DomainError("hamiltonian: need t > 0");
  const double sh = std::sinh(q);
  const double sh2 = std::sinh(0.5 * q);
  return 0.5 * t * sh * sh - 0.5 * p * p / t + 4.0 * nu * sh2 * sh2;
}

/// Boundary data at t0:  q0 = 2 lambda W(t0, nu),  p0 = -t0 dq/dt (exact
/// t-derivative of the boundary integral, not its leading asymptotic).
std::pair<double, double> initial_conditions(double t0, const ModelParams& params);

/// Smallest start time >= the floor for which the neglected boundary
/// corrections (of relative size q0^2) stay below 1e-14.
double choose_t0(const ModelParams& params);

/// Dense-output solution of the backward problem on [t_min, t0].
class Trajectory {
 public:
  ModelParams params;
  double t0 = 0.0;
  double t_min = 0.0;
  double tol = 0.0;
  std::vector<std::string> warnings;

  struct Node {
    double t, q, p;
  };
  /// Accepted integration nodes, ordered by decreasing t (integration order).
  std::vector<Node> nodes() const;

  double q(double t) const;
  double p(double t) const;
  void eval(double t, double& q, double& p) const;
  /// q, dq/dt, d^2q/dt^2 from the step interpolant (not from the RHS).
  void eval_q_derivs(double t, double& q, double& dq, double& d2q) const;

  bool identically_zero() const { return zero_; }

  /// Integrate f(s, q(s), p(s)) ds over [t_lo, t_hi] along the solution.
  template <class F>
  double integrate_along(double t_lo, double t_hi, F&& f) const;

  static Trajectory solve(const ModelParams& params, double t0, double t_min,
                          double tol);

 private:
  bool zero_ = false;
  std::vector<ode::DenseStep> steps_;  // ascending in x = ln t
  const ode::DenseStep& locate(double x) const;
  friend Trajectory solve_backward(const ModelParams&, double, double, double);
};

/// Adaptive backward solve; pass t0 <= 0 to pick it by the boundary-accuracy rule.
Trajectory solve_backward(const ModelParams& params, double t0 = 0.0,
                          double t_min = defaults::t_min,
                          double tol = defaults::solver_tol);

/// Defect of u(t) = e^{-q(2t)} in the Painleve-III equation
///   u'' = (u')^2/u - u'/t + (2 nu/t)(u^2 - 1) + u^3 - 1/u,
/// with u, u', u'' taken from the dense interpolant.  Zero for an exact solution.
double painleve3_residual(const Trajectory& traj, double t);

/// Analytic bounds for the integral tails beyond t0, from the boundary decay
/// q ~ C e^{-s} s^{-nu-1/2}, C = 2 lambda Gamma(nu+1/2) / 2^{nu+1/2}:
///   action tail: int_{t0}^inf (p dq/ds - H) ds ~ -C^2/2 e^{-2 t0} t0^{-2 nu},
///   H tail:      int_{t0}^inf H ds            ~ -C^2/4 e^{-2 t0} t0^{-2 nu - 1},
///   sinh2 tail:  int_{t0}^inf sinh^2(q/2) ds  ~  C^2/8 e^{-2 t0} t0^{-2 nu - 1}.
struct TailEstimates {
  double action = 0.0;
  double hamiltonian = 0.0;
  double sinh2 = 0.0;
};
TailEstimates boundary_tails(const ModelParams& params, double t0);

// --- template implementation ---

template <class F>
double Trajectory::integrate_along(double t_lo, double t_hi, F&& f) const {
  if (zero_) return 0.0;
  if (!(t_lo > 0.0) || t_hi < t_lo)
    throw DomainError("integrate_along: bad range");
  const double xa = std::log(t_lo), xb = std::log(t_hi);
  // 7-point Gauss-Legendre panel; steps are short enough that one panel per
  // quarter-unit of x resolves the quartic interpolant to roundoff.
  static const double gx[4] = {0.0, 0.4058451513773971669066064,
                               0.7415311855993944398638648,
                               0.9491079123427585245261897};
  static const double gw[4] = {0.4179591836734693877551020,
                               0.3818300505051189449503698,
                               0.2797053914892766679014678,
                               0.1294849661688696932706114};
  double total = 0.0;
  for (const auto& st : steps_) {
    const double s_lo = std::min(st.x_from, st.x_from + st.h);
    const double s_hi = std::max(st.x_from, st.x_from + st.h);
    const double a = std::max(s_lo, xa), b = std::min(s_hi, xb);
    if (a >= b) continue;
    const int panels = 1 + static_cast<int>((b - a) / 0.25);
    for (int pn = 0; pn < panels; ++pn) {
      const double pa = a + (b - a) * pn / panels;
      const double pb = a + (b - a) * (pn + 1) / panels;
      const double c = 0.5 * (pa + pb), hw = 0.5 * (pb - pa);
      double acc = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int sgn = (i == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
          const double x = c + sgn * hw * gx[i];
          const double th = st.theta(x);
          const double s = std::exp(x);
          // ds = s dx
          acc += gw[i] * f(s, st.value(0, th), st.value(1, th)) * s;
          if (i == 0) break;
        }
      }
      total += acc * hw;
    }
  }
  return total;
}

}  // namespace sgtau
