#pragma once

// Serialization: trajectory CSV with a JSON header line, and JSON records for
// tau samples, fit results, connection constants, and verification reports.
// Output is byte-stable across runs for identical inputs.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sgtau/connection.hpp"
#include "sgtau/sinh_gordon.hpp"
#include "sgtau/tau.hpp"
#include "sgtau/verify.hpp"

namespace sgtau::io {

using json = nlohmann::ordered_json;

json to_json(const ModelParams& p);
json to_json(const tau::TauSample& s);
json to_json(const tau::FitResult& f);
json to_json(const connect::ConnectionConstants& c);
json to_json(const verify::VerificationReport& r);

/// `# {json header}` line followed by `t,q,p` rows at the integration nodes.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Deterministic float formatting used by every CSV writer (%.17g).
std::string format_double(double v);

}  // namespace sgtau::io
