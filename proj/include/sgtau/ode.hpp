#pragma once

// Dormand-Prince 5(4) with quartic dense output, specialized to 2-state
// systems.  The per-step interpolants are kept in power form so that first
// and second derivatives of the solution are available after the fact.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sgtau/errors.hpp"

namespace sgtau::ode {

using State = std::array<double, 2>;

/// One accepted step: x covers [x_from, x_from + h] (h may be negative).
/// y_i(x) = sum_k poly[i][k] * theta^k with theta = (x - x_from)/h in [0, 1].
struct DenseStep {
  double x_from = 0.0;
  double h = 0.0;
  std::array<std::array<double, 5>, 2> poly{};

  double theta(double x) const { return (x - x_from) / h; }
  double value(int i, double th) const {
    const auto& a = poly[i];
    return a[0] + th * (a[1] + th * (a[2] + th * (a[3] + th * a[4])));
  }
  /// dy_i/dx
  double deriv(int i, double th) const {
    const auto& a = poly[i];
    return (a[1] + th * (2.0 * a[2] + th * (3.0 * a[3] + th * 4.0 * a[4]))) / h;
  }
  /// d^2 y_i / dx^2
  double deriv2(int i, double th) const {
    const auto& a = poly[i];
    return (2.0 * a[2] + th * (6.0 * a[3] + th * 12.0 * a[4])) / (h * h);
  }
};

struct OdeSolution {
  std::vector<DenseStep> steps;  // in integration order
  State y_end{};
  std::size_t n_accepted = 0;
  std::size_t n_rejected = 0;
};

/// Integrate y' = f(x, y) from x0 to x1 (either direction) with relative
/// tolerance rtol per component and absolute floor atol.
template <class RHS>
OdeSolution integrate_dopri5(RHS&& f, double x0, double x1, State y0,
                             double rtol, double atol = 1e-300) {
  // Dormand-Prince coefficients.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double d1 = -12715105075.0 / 11282082432.0,
                   d3 = 87487479700.0 / 32700410799.0,
                   d4 = -10690763975.0 / 1880347072.0,
                   d5 = 701980252875.0 / 199316789632.0,
                   d6 = -1453857185.0 / 822651844.0,
                   d7 = 69997945.0 / 29380423.0;

  if (!(rtol > 0.0)) throw DomainError("integrate_dopri5: need rtol > 0");
  OdeSolution sol;
  if (x0 == x1) {
    sol.y_end = y0;
    return sol;
  }
  const double dir = (x1 > x0) ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);
  double x = x0;
  State y = y0;
  State k1;
  f(x, y, k1);
  double h = dir * std::min(0.05, 0.1 * span);
  double err_old = 1e-4;
  const std::size_t max_steps = 2000000;

  State k2, k3, k4, k5, k6, k7, yt, y1;
  while (dir * (x1 - x) > 0.0) {
    if (sol.n_accepted + sol.n_rejected > max_steps)
      throw SolverError("integrate_dopri5: step budget exhausted", x);
    if (std::abs(h) < 16.0 * 2.22e-16 * std::max(1.0, std::abs(x)))
      throw SolverError("integrate_dopri5: step size underflow", x);
    if (dir * (x + h - x1) > 0.0) h = x1 - x;

    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(x + c2 * h, yt, k2);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(x + c3 * h, yt, k3);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(x + c4 * h, yt, k4);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(x + c5 * h, yt, k5);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    f(x + h, yt, k6);
    for (int i = 0; i < 2; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    f(x + h, y1, k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(0.5 * err);

    if (err <= 1.0) {
      DenseStep step;
      step.x_from = x;
      step.h = h;
      for (int i = 0; i < 2; ++i) {
        const double dy = y1[i] - y[i];
        const double bspl = h * k1[i] - dy;
        const double r1 = y[i];
        const double r2 = dy;
        const double r3 = bspl;
        const double r4 = dy - h * k7[i] - bspl;
        const double r5 = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                               d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        // y(th) = r1 + th (r2 + (1-th)(r3 + th (r4 + (1-th) r5)))  ->  power form
        step.poly[i] = {r1, r2 + r3, -r3 + r4 + r5, -r4 - 2.0 * r5, r5};
      }
      sol.steps.push_back(step);
      ++sol.n_accepted;
      x += h;
      y = y1;
      k1 = k7;
      // PI controller (Gustafsson).
      const double fac =
          0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_old, 0.4 / 5.0);
      h *= std::min(5.0, std::max(0.2, fac));
      err_old = std::max(err, 1e-4);
    } else {
      ++sol.n_rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
  }
  sol.y_end = y;
  return sol;
}

}  // namespace sgtau::ode
