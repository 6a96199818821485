// Command-line front end: trajectory solves, tau evaluation, connection
// constants, the verification suite, parameter sweeps, and the f2 integral.
//
// Exit codes: 0 success; 1 verification criteria failed; 2 domain error;
// 3 solver/convergence failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgtau/connection.hpp"
#include "sgtau/io.hpp"
#include "sgtau/quadrature.hpp"
#include "sgtau/sinh_gordon.hpp"
#include "sgtau/tau.hpp"
#include "sgtau/verify.hpp"

using namespace sgtau;
using sgtau::io::json;

namespace {

struct CommonOpts {
  double nu = 0.0;
  std::optional<double> lambda;
  std::optional<double> sigma;
  double t0 = 0.0;  // 0 = choose automatically
  double t_min = defaults::t_min;
  double tol = defaults::solver_tol;
  std::string output;
  std::string format = "csv";
};

double env_tol() {
  if (const char* s = std::getenv("CONNECT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid CONNECT_TOL='" << s << "'\n";
  }
  return defaults::solver_tol;
}

void add_param_flags(CLI::App* cmd, CommonOpts& o, bool with_solver_opts = true) {
  cmd->add_option("--nu", o.nu, "modification parameter nu (> -1/2)")
      ->capture_default_str();
  auto* lam = cmd->add_option("--lambda", o.lambda,
                              "boundary amplitude lambda (lambda*pi in [0,1])");
  auto* sig = cmd->add_option("--sigma", o.sigma, "exponent sigma in [0,1]");
  lam->excludes(sig);
  sig->excludes(lam);
  if (with_solver_opts) {
    cmd->add_option("--t0", o.t0, "start of backward integration (0 = auto)")
        ->capture_default_str();
    cmd->add_option("--t-min", o.t_min, "end of backward integration")
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "ODE local error tolerance")
        ->capture_default_str();
  }
  cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
}

ModelParams params_from(const CommonOpts& o) {
  if (o.sigma) return ModelParams::from_sigma(o.nu, *o.sigma);
  return ModelParams::from_lambda(o.nu, o.lambda.value_or(0.0));
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + o.output);
  f << text;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i)
    v.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : i / (n - 1.0)));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sgtau: connection problem of the nu-modified radial sinh-Gordon "
      "equation - trajectories, tau-function, connection constants"};
  app.require_subcommand(1);

  CommonOpts solve_o, tau_o, connect_o, f2_o, sweep_o;
  solve_o.tol = tau_o.tol = env_tol();

  auto* cmd_solve = app.add_subcommand(
      "solve", "integrate the Hamiltonian system backward, write (t,q,p) CSV");
  add_param_flags(cmd_solve, solve_o);

  auto* cmd_tau =
      app.add_subcommand("tau", "evaluate the tau-function on a t-grid (JSON)");
  add_param_flags(cmd_tau, tau_o);
  double tau_t_lo = 0.02, tau_t_hi = 10.0;
  int tau_n = 25;
  cmd_tau->add_option("--t-lo", tau_t_lo, "grid start")->capture_default_str();
  cmd_tau->add_option("--t-hi", tau_t_hi, "grid end")->capture_default_str();
  cmd_tau->add_option("-n,--n", tau_n, "number of log-spaced points")
      ->capture_default_str();

  auto* cmd_connect = app.add_subcommand(
      "connect", "print closed-form connection constants (JSON)");
  add_param_flags(cmd_connect, connect_o, false);

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the verification suite, one pass/fail line per criterion");
  std::string only, report_path;
  cmd_verify->add_option("--only", only, "run only criteria whose name contains this");
  cmd_verify->add_option("-o,--output", report_path, "write the JSON report here");

  auto* cmd_sweep = app.add_subcommand(
      "sweep", "CSV of B(nu, sigma) and A(nu, sigma) over a sigma-grid");
  std::vector<double> sweep_nus{-0.25, 0.0, 0.5, 1.0, 2.0};
  double sweep_lo = 0.02, sweep_hi = 0.98;
  int sweep_n = 49;
  cmd_sweep->add_option("--nu-list", sweep_nus, "nu values")->capture_default_str();
  cmd_sweep->add_option("--sigma-lo", sweep_lo, "sigma grid start")
      ->capture_default_str();
  cmd_sweep->add_option("--sigma-hi", sweep_hi, "sigma grid end")
      ->capture_default_str();
  cmd_sweep->add_option("-n,--n", sweep_n, "sigma grid size")->capture_default_str();
  cmd_sweep->add_option("-o,--output", sweep_o.output, "output file");

  auto* cmd_f2 = app.add_subcommand("f2", "first series coefficient f2(t; nu)");
  double f2_t = 5.0;
  cmd_f2->add_option("--t", f2_t, "evaluation time")->capture_default_str();
  cmd_f2->add_option("--nu", f2_o.nu, "modification parameter")->capture_default_str();
  cmd_f2->add_option("-o,--output", f2_o.output, "output file");

  auto* cmd_config = app.add_subcommand(
      "config", "print the effective numeric defaults (JSON)");
  std::string config_out;
  cmd_config->add_option("-o,--output", config_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_solve) {
      const ModelParams p = params_from(solve_o);
      const Trajectory traj =
          solve_backward(p, solve_o.t0, solve_o.t_min, solve_o.tol);
      for (const auto& w : traj.warnings) std::cerr << "warning: " << w << "\n";
      std::ostringstream os;
      io::write_trajectory_csv(os, traj);
      write_out(solve_o, os.str());
    } else if (*cmd_tau) {
      const ModelParams p = params_from(tau_o);
      tau::TauEvaluator eval(
          p, tau::TauOptions{tau_o.t0, tau_o.t_min, tau_o.tol, defaults::fd_step_nu});
      json arr = json::array();
      for (double t : log_grid(tau_t_lo, tau_t_hi, tau_n))
        arr.push_back(io::to_json(eval.sample(t)));
      write_out(tau_o, arr.dump(2) + "\n");
    } else if (*cmd_connect) {
      const ModelParams p = params_from(connect_o);
      if (!p.in_connection_region())
        throw DomainError(
            "connection constants require sigma < 1 + 2 nu (equivalently "
            "s + nu > 0); got sigma = " +
            std::to_string(p.sigma) + ", nu = " + std::to_string(p.nu));
      write_out(connect_o, io::to_json(connect::connection_constants(p)).dump(2) + "\n");
    } else if (*cmd_verify) {
      const auto report = verify::run_verification(only, [](const auto& c) {
        std::printf("[%s] %-18s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.description.c_str());
        for (const auto& it : c.items)
          if (!it.pass)
            std::printf("       FAIL %s: observed %.12g vs %.12g "
                        "(deviation %.3e > tol %.3e)\n",
                        it.label.c_str(), it.observed, it.analytic, it.deviation,
                        it.tolerance);
        std::fflush(stdout);
      });
      if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        f << io::to_json(report).dump(2) << "\n";
      }
      if (report.criteria.empty()) {
        std::cerr << "no criterion matches --only '" << only << "'\n";
        return 2;
      }
      return report.all_pass ? 0 : 1;
    } else if (*cmd_sweep) {
      std::ostringstream os;
      os << "nu,sigma,B,A\n";
      for (double nu : sweep_nus) {
        for (double sigma : log_grid(sweep_lo, sweep_hi, sweep_n)) {
          const ModelParams p = ModelParams::from_sigma(nu, sigma);
          const double b = connect::coefficient_B(nu, sigma);
          std::string a = "nan";
          if (p.in_connection_region())
            a = io::format_double(connect::coefficient_A(nu, p.lambda));
          os << io::format_double(nu) << ',' << io::format_double(sigma) << ','
             << io::format_double(b) << ',' << a << "\n";
        }
      }
      write_out(sweep_o, os.str());
    } else if (*cmd_f2) {
      const auto r = quad::f2_full(f2_t, f2_o.nu);
      json out{{"t", f2_t},
               {"nu", f2_o.nu},
               {"f2", r.value},
               {"error_estimate", r.error_estimate},
               {"loss_of_precision", r.loss_of_precision}};
      write_out(f2_o, out.dump(2) + "\n");
    } else if (*cmd_config) {
      json out{{"solver_tol", env_tol()},
               {"t_min", defaults::t_min},
               {"t0_floor", defaults::t0_floor},
               {"quad_rel_tol", defaults::quad_rel_tol},
               {"quad_rel_tol_2d", defaults::quad_rel_tol_2d},
               {"action_lambda_nodes", defaults::action_lambda_nodes},
               {"fd_step_lambda", defaults::fd_step_lambda},
               {"fd_step_nu", defaults::fd_step_nu},
               {"fit_window", json::array({defaults::fit_window_lo,
                                           defaults::fit_window_hi})}};
      CommonOpts o;
      o.output = config_out;
      write_out(o, out.dump(2) + "\n");
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver failure at t = " << e.t_at_failure << ": " << e.what()
              << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
