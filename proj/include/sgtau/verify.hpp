#pragma once

// The verification suite: every analytic connection formula is checked
// against an independent numerical route (trajectory fits, alternative
// integral representations, series cross-checks) at fixed tolerances.

#include <functional>
#include <string>
#include <vector>

namespace sgtau::verify {

struct CheckItem {
  std::string label;
  double analytic = 0.0;   // reference value (or 0 where only a bound applies)
  double observed = 0.0;   // value from the independent route
  double deviation = 0.0;  // |difference| in the units of `tolerance`
  double tolerance = 0.0;
  bool pass = false;
};

struct CriterionResult {
  std::string name;
  std::string description;
  bool pass = true;
  std::vector<CheckItem> items;
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = true;
};

/// Names: exponent-law, prefactor-B, amplitude-A, tracy, identities, small-t,
/// large-t, f2-series, wu, painleve-residual.
std::vector<std::string> criterion_names();

/// Run all criteria whose name contains `filter` (empty = all).  `progress`
/// (optional) receives each finished criterion, in order.
VerificationReport run_verification(
    const std::string& filter = {},
    const std::function<void(const CriterionResult&)>& progress = nullptr);

}  // namespace sgtau::verify
