#include "sgtau/quadrature.hpp"

#include <cmath>
#include <string>

namespace sgtau::quad {

namespace {

void check_watson_args(double t, double nu, const char* fn) {
  if (!(t > 0.0))
    throw DomainError(std::string(fn) + ": need t > 0, got " + std::to_string(t));
  if (!(nu > -0.5))
    throw DomainError(std::string(fn) + ": need nu > -1/2 for integrability, got " +
                      std::to_string(nu));
}

// Truncation point for int_0^inf e^{-t u^2} ...: e^{-t U^2} ~ 3e-20.
double truncation_point(double t) { return std::sqrt(45.0 / t); }

// One-term Laplace estimate of the neglected tail int_U^inf e^{-t u^2} g(u) du,
// with g the slowly varying factor; below e^{-45}/(2 t U^2) in relative terms.
double tail_estimate(double t, double U, double g_at_U) {
  return std::exp(-t * U * U) * g_at_U / (2.0 * t * U);
}

}  // namespace

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  std::vector<std::pair<double, double>> nw(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nw[i] = {-x, w};
    nw[n - 1 - i] = {x, w};
  }
  return nw;
}

double watson_integral(double t, double nu, const QuadSettings& st) {
  check_watson_args(t, nu, "watson_integral");
  // y = 1 + u^2:  W = 2 e^{-t} int_0^U e^{-t u^2} u^{2 nu} (u^2+2)^{-nu-1/2} du + tail.
  const double U = truncation_point(t);
  auto f = [t, nu](double u) {
    return std::exp(-t * u * u) * std::pow(u, 2.0 * nu) *
           std::pow(u * u + 2.0, -nu - 0.5);
  };
  const QuadResult r = integrate(f, 0.0, U, st);
  const double g_U = std::pow(U, 2.0 * nu) * std::pow(U * U + 2.0, -nu - 0.5);
  return 2.0 * std::exp(-t) * (r.value + tail_estimate(t, U, g_U));
}

double watson_integral_dt(double t, double nu, const QuadSettings& st) {
  check_watson_args(t, nu, "watson_integral_dt");
  const double U = truncation_point(t);
  auto f = [t, nu](double u) {
    return std::exp(-t * u * u) * (1.0 + u * u) * std::pow(u, 2.0 * nu) *
           std::pow(u * u + 2.0, -nu - 0.5);
  };
  const QuadResult r = integrate(f, 0.0, U, st);
  const double g_U = (1.0 + U * U) * std::pow(U, 2.0 * nu) * std::pow(U * U + 2.0, -nu - 0.5);
  return -2.0 * std::exp(-t) * (r.value + tail_estimate(t, U, g_U));
}

F2Result f2_full(double t, double nu, QuadSettings st) {
  check_watson_args(t, nu, "f2");
  const double U = truncation_point(t);
  QuadSettings inner_st = st;
  inner_st.rel_tol = 0.1 * st.rel_tol;
  // y_i = 1 + u_i^2;  u carries the (y^2-1)^{-1/2} side, v the (y^2-1)^{+1/2} side.
  auto inner = [&](double v) {
    const double vv = v * v;
    auto f = [&](double u) {
      const double uu = u * u;
      const double d = 2.0 + uu + vv;
      return std::exp(-t * uu) * std::pow(u, 2.0 * nu) *
             std::pow(uu + 2.0, -nu - 0.5) / (d * d);
    };
    const QuadResult r = integrate(f, 0.0, U, inner_st);
    return r.value * std::exp(-t * vv) * std::pow(v, 2.0 * nu + 2.0) *
           std::pow(vv + 2.0, -nu + 0.5);
  };
  const QuadResult outer = integrate(inner, 0.0, U, st);
  F2Result res;
  res.value = -4.0 * std::exp(-2.0 * t) * outer.value;
  res.error_estimate = 4.0 * std::exp(-2.0 * t) * outer.error_estimate;
  res.loss_of_precision = t < 0.05;
  return res;
}

double f2(double t, double nu, QuadSettings st) { return f2_full(t, nu, st).value; }

}  // namespace sgtau::quad
