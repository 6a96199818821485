#pragma once

#include <stdexcept>
#include <string>

namespace sgtau {

/// Invalid argument / outside a function's mathematical domain.  CLI exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// ODE integration failure (step-size underflow, step budget exhausted).  CLI exit code 3.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double t_fail)
      : std::runtime_error(what), t_at_failure(t_fail) {}
  double t_at_failure;
};

/// Quadrature tolerance not met within the subdivision budget.  CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgtau
