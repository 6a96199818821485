#pragma once

// The generalized tau-function
//   tau(t) = exp[ -(t/2) H(t) + S(t)/2 - (nu/4)(p dq/dnu + dS/dnu) ] cosh(q/2),
// its definitional integral form, the action integral in both
// representations, the analytic small-t action constant, and the fits that
// extract (sigma, B, A) from solved trajectories.

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sgtau/constants.hpp"
#include "sgtau/params.hpp"
#include "sgtau/sinh_gordon.hpp"

namespace sgtau::tau {

struct TauSample {
  double t = 0.0;
  ModelParams params;
  double tau = 1.0;
  double H_t = 0.0;      // Hamiltonian at t
  double S_t = 0.0;      // action at t
  double nu_term = 0.0;  // p dq/dnu + dS/dnu
  struct Diagnostics {
    double action_tail = 0.0;        // analytic tail beyond t0 included in S_t
    double nu_fd_error = 0.0;        // Richardson step-halving estimate
    bool nu_term_skipped = false;    // true on the exact nu = 0 path
  } diagnostics;
};

struct FitResult {
  double sigma_fit = 0.0;
  double B_fit = 0.0;
  double A_fit = 0.0;
  double residual = 0.0;  // max |model - data| over the window, log scale
  std::pair<double, double> t_window{0.0, 0.0};
};

struct TauOptions {
  double t0 = 0.0;  // <= 0: choose by the boundary-accuracy rule
  double t_min = defaults::t_min;
  double tol = defaults::solver_tol;
  double h_nu = defaults::fd_step_nu;
};

/// Holds the base trajectory and, for nu != 0, the four nu-shifted
/// trajectories used by the central differences of Cor.-type identities.
/// Immutable after construction; safe to share across threads.
class TauEvaluator {
 public:
  explicit TauEvaluator(const ModelParams& params, TauOptions opt = {});

  const ModelParams& params() const { return params_; }
  const Trajectory& trajectory() const { return base_; }

  /// S(t) = int_t^inf (p dq/ds - H) ds along the trajectory plus the tail.
  double action_direct(double t) const;
  /// int_t^inf H ds (plus tail).
  double integral_H(double t) const;
  /// int_t^inf sinh^2(q/2) ds (plus tail).
  double integral_sinh2(double t) const;
  /// p dq/dnu + dS/dnu by Richardson central differences; 0 identically at nu=0.
  double nu_term(double t, double* fd_error = nullptr) const;

  /// The exact finite-t identity assembled from the pieces above.
  TauSample sample(double t) const;
  /// Definitional form exp[(1/2) int H - nu int sinh^2(q/2)] cosh(q/2).
  double tau_direct(double t) const;

 private:
  ModelParams params_;
  TauOptions opt_;
  Trajectory base_;
  std::array<Trajectory, 4> probes_;  // nu+h, nu-h, nu+h/2, nu-h/2 (nu != 0 only)
  bool have_probes_ = false;
  double action_on(const Trajectory& traj, double t) const;
};

/// Convenience single-point evaluation (solves trajectories internally).
TauSample tau_exact(double t, const ModelParams& params, TauOptions opt = {});

/// Action by the lambda-representation  S(t) = -int_0^lambda p dq/dlambda' dlambda',
/// Gauss-Legendre in lambda' with re-solved trajectories at every node.
/// The node solves are t-independent, so one instance serves many t.
class LambdaAction {
 public:
  LambdaAction(const ModelParams& params, int n_nodes = defaults::action_lambda_nodes,
               TauOptions opt = {});
  double operator()(double t) const;
  int n_nodes() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    double weight;
    Trajectory base;                  // at lambda'
    std::array<Trajectory, 4> fd;     // lambda' +- h, +- h/2
  };
  std::vector<Node> nodes_;
};

/// One-shot wrapper; reports a quadrature error estimate (n vs n-3 nodes)
/// through the optional out parameter.
double action_S(double t, const ModelParams& params,
                int n_nodes = defaults::action_lambda_nodes,
                double* error_estimate = nullptr, TauOptions opt = {});

/// Constant term of the small-t action expansion
///   S(t) = (sigma^2/2) ln t + action_smallt_analytic + O(t^{1-sigma}).
double action_smallt_analytic(const ModelParams& params);

/// Closed form of J+ - J- (the integrated Gamma-ratio integral) and its
/// direct quadrature counterpart int_0^sigma (s/2)[psi(nu+(1+s)/2)+psi(nu+(1-s)/2)] ds.
double gamma_ratio_integral_closed(double nu, double sigma);
double gamma_ratio_integral_quadrature(double nu, double sigma);

struct FitOptions {
  int n_samples = 25;
  double series_order = 10.0;  // lattice truncation exponent
  int max_iterations = 24;
  bool corrections = true;     // subtract the differential-equation series
};

/// Power-law regression of ln u against ln B + sigma ln t on (t, u) samples,
/// optionally correction-aware through the local expansion.
struct PowerLawFit {
  double sigma = 0.0, B = 0.0, residual = 0.0;
};
PowerLawFit fit_u_samples(std::span<const double> ts, std::span<const double> us,
                          double nu, const FitOptions& opt = {});

/// Full connection fit: (sigma, B) from ln u(t/2) over the window, then A from
/// the tau samples via ln(tau/cosh(q/2)) with the matching correction series.
FitResult fit_connection(const Trajectory& traj, std::span<const TauSample> tau_series,
                         std::pair<double, double> window, const FitOptions& opt = {});

namespace detail {
/// Small dense least squares (normal equations); columns as vectors.
std::vector<double> lstsq(const std::vector<std::vector<double>>& cols,
                          const std::vector<double>& y);
}  // namespace detail

}  // namespace sgtau::tau
