#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "sgtau/constants.hpp"
#include "sgtau/errors.hpp"

namespace sgtau::quad {

struct QuadSettings {
  double abs_tol = 1e-300;
  double rel_tol = defaults::quad_rel_tol;
  int max_subdivisions = defaults::quad_max_subdivisions;
  double singularity_exponent = -0.5;  // at y = 1; removed by the y = 1 + u^2 map
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod nodes on [0,1] side, with embedded 7-point Gauss weights.
inline constexpr double kronrod_x[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
inline constexpr double kronrod_w[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
inline constexpr double gauss_w[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  double k = kronrod_w[0] * f0;
  double g = gauss_w[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kronrod_x[i];
    const double s = f(c - dx) + f(c + dx);
    k += kronrod_w[i] * s;
    if (i % 2 == 0) g += gauss_w[i / 2] * s;
  }
  k *= h;
  g *= h;
  const double diff = std::abs(k - g);
  return {k, std::max(diff, std::abs(k) * 5e-17)};
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 15(7) integration of f on [a, b].
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadSettings& st = {}) {
  if (!(st.abs_tol > 0.0) || !(st.rel_tol > 0.0) || st.max_subdivisions < 1)
    throw DomainError("integrate: invalid quadrature settings");
  QuadResult res;
  if (a == b) return res;
  std::priority_queue<detail::Segment> segs;
  auto [v, e] = detail::gk15(f, a, b);
  segs.push({a, b, v, e});
  double total = v, total_err = e;
  int n = 1;
  while (total_err > std::max(st.abs_tol, st.rel_tol * std::abs(total)) &&
         n < st.max_subdivisions) {
    detail::Segment worst = segs.top();
    segs.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at roundoff limit
      segs.push(worst);
      break;
    }
    auto [v1, e1] = detail::gk15(f, worst.a, mid);
    auto [v2, e2] = detail::gk15(f, mid, worst.b);
    total += v1 + v2 - worst.value;
    total_err += e1 + e2 - worst.error;
    segs.push({worst.a, mid, v1, e1});
    segs.push({mid, worst.b, v2, e2});
    ++n;
  }
  res.value = total;
  res.error_estimate = total_err;
  res.subdivisions = n;
  if (total_err > std::max(st.abs_tol, st.rel_tol * std::abs(total)) * 1e3)
    throw ConvergenceError("integrate: tolerance not met after " +
                           std::to_string(n) + " subdivisions");
  return res;
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the Legendre recurrence).
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// The boundary-condition integral
///   W(t, nu) = int_1^inf e^{-t y} (y^2-1)^{-1/2} ((y-1)/(y+1))^nu dy,
/// computed after the substitution y = 1 + u^2 removes the endpoint singularity.
/// W(t, 0) = K_0(t).
double watson_integral(double t, double nu, const QuadSettings& st = {});

/// d/dt of watson_integral: -int_1^inf y e^{-t y} (y^2-1)^{-1/2} ((y-1)/(y+1))^nu dy.
double watson_integral_dt(double t, double nu, const QuadSettings& st = {});

struct F2Result {
  double value = 0.0;
  double error_estimate = 0.0;
  bool loss_of_precision = false;  // flagged for t < 0.05
};

/// First series coefficient
///   f2(t; nu) = - int int_1^inf e^{-t(y1+y2)} ((y1-1)/(y1+1))^nu ((y2-1)/(y2+1))^nu
///               sqrt((y2^2-1)/(y1^2-1)) (y1+y2)^{-2} dy1 dy2,
/// by iterated adaptive quadrature after y_i = 1 + u_i^2.
F2Result f2_full(double t, double nu,
                 QuadSettings st = {.rel_tol = defaults::quad_rel_tol_2d});
double f2(double t, double nu,
          QuadSettings st = {.rel_tol = defaults::quad_rel_tol_2d});

}  // namespace sgtau::quad
