#include "sgtau/io.hpp"

#include <cstdio>
#include <ostream>

namespace sgtau::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json to_json(const ModelParams& p) {
  return json{{"nu", p.nu}, {"lambda", p.lambda}, {"sigma", p.sigma}, {"s", p.s}};
}

json to_json(const tau::TauSample& s) {
  return json{{"t", s.t},
              {"params", to_json(s.params)},
              {"tau", s.tau},
              {"H_t", s.H_t},
              {"S_t", s.S_t},
              {"nu_term", s.nu_term},
              {"diagnostics",
               json{{"action_tail", s.diagnostics.action_tail},
                    {"nu_fd_error", s.diagnostics.nu_fd_error},
                    {"nu_term_skipped", s.diagnostics.nu_term_skipped}}}};
}

json to_json(const tau::FitResult& f) {
  return json{{"sigma_fit", f.sigma_fit},
              {"B_fit", f.B_fit},
              {"A_fit", f.A_fit},
              {"residual", f.residual},
              {"t_window", json::array({f.t_window.first, f.t_window.second})}};
}

json to_json(const connect::ConnectionConstants& c) {
  return json{{"params", to_json(c.params)},
              {"B", c.B},
              {"A", c.A},
              {"exponent_u", c.exponent_u},
              {"exponent_tau", c.exponent_tau}};
}

json to_json(const verify::VerificationReport& r) {
  json criteria = json::array();
  for (const auto& c : r.criteria) {
    json items = json::array();
    for (const auto& it : c.items)
      items.push_back(json{{"label", it.label},
                           {"analytic", it.analytic},
                           {"observed", it.observed},
                           {"deviation", it.deviation},
                           {"tolerance", it.tolerance},
                           {"pass", it.pass}});
    criteria.push_back(json{{"name", c.name},
                            {"description", c.description},
                            {"pass", c.pass},
                            {"items", items}});
  }
  return json{{"criteria", criteria}, {"all_pass", r.all_pass}};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  json header{{"params", to_json(traj.params)},
              {"t0", traj.t0},
              {"t_min", traj.t_min},
              {"tol", traj.tol},
              {"warnings", traj.warnings}};
  os << "# " << header.dump() << "\n";
  os << "t,q,p\n";
  for (const auto& node : traj.nodes())
    os << format_double(node.t) << ',' << format_double(node.q) << ','
       << format_double(node.p) << "\n";
}

}  // namespace sgtau::io
