#pragma once

#include <numbers>

namespace sgtau {

/// Mathematical constants shared by the closed-form expressions.
struct SpecialConstants {
  double euler_gamma;    ///< Euler-Mascheroni constant
  double zeta_prime_m1;  ///< zeta'(-1) = 1/12 - ln A_Glaisher
  double ln2;
  double ln_pi;
};

namespace specfun {

inline constexpr SpecialConstants constants{
    0.57721566490153286060651209008240243,  // euler_gamma
    -0.16542114370045092921391966024278065,  // zeta_prime_m1
    std::numbers::ln2,
    1.14472988584940017414342735135305871,  // ln(pi)
};

}  // namespace specfun

/// Numeric defaults, shared verbatim by library entry points and the CLI.
namespace defaults {

inline constexpr double solver_tol = 1e-12;       // ODE local error tolerance
inline constexpr double t_min = 1e-2;             // end of backward integration
inline constexpr double t0_floor = 20.0;          // minimal start of backward integration
inline constexpr double quad_rel_tol = 1e-12;     // 1-D adaptive quadrature
inline constexpr double quad_rel_tol_2d = 1e-8;   // iterated 2-D quadrature (f2)
inline constexpr int quad_max_subdivisions = 1000;
inline constexpr int action_lambda_nodes = 12;    // Gauss-Legendre nodes on [0, lambda]
inline constexpr double fd_step_lambda = 1e-4;    // central-difference step in lambda
inline constexpr double fd_step_nu = 1e-4;        // central-difference step in nu
inline constexpr double fit_window_lo = 0.01;
inline constexpr double fit_window_hi = 0.1;

}  // namespace defaults

}  // namespace sgtau
