#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sgtau/constants.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SGTAU_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("solve: zero trajectory and exit codes") {
  auto r = run_cli("solve --nu 0 --lambda 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("t,q,p") != std::string::npos);
  // domain error -> exit 2, message cites the restriction
  auto bad = run_cli("solve --nu 0 --sigma 1.5");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("solve: last row has p near sigma") {
  auto r = run_cli("solve --nu 0.5 --sigma 0.4 --t-min 0.01");
  CHECK(r.exit_code == 0);
  // last CSV row: t,q,p with t = t_min
  std::istringstream is(r.out);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  const auto c1 = last.find(','), c2 = last.rfind(',');
  REQUIRE(c1 != std::string::npos);
  REQUIRE(c2 != c1);
  const double t = std::stod(last.substr(0, c1));
  const double p = std::stod(last.substr(c2 + 1));
  CHECK(t == doctest::Approx(0.01).epsilon(1e-9));
  CHECK(std::abs(p - 0.4) < 0.05);
}

TEST_CASE("connect: values and hypothesis guard") {
  auto r = run_cli("connect --nu 0 --lambda 0.31830988618");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["A"].get<double>() - 0.5424) < 1e-4);
  auto guard = run_cli("connect --nu -0.4 --sigma 0.9");
  CHECK(guard.exit_code == 2);
}

TEST_CASE("verify --only filters") {
  auto r = run_cli("verify --only wu");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wu") != std::string::npos);
  CHECK(r.out.find("exponent-law") == std::string::npos);
  auto none = run_cli("verify --only nonexistent-criterion");
  CHECK(none.exit_code == 2);
}

TEST_CASE("determinism: identical runs give identical bytes") {
  const std::string args = "solve --nu 0.3 --sigma 0.5 --t-min 0.05";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run_cli("f2 --t 5 --nu 0.25");
  auto d = run_cli("f2 --t 5 --nu 0.25");
  CHECK(c.out == d.out);
}

TEST_CASE("CLI defaults equal the module defaults") {
  auto r = run_cli("config");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["solver_tol"].get<double>() == sgtau::defaults::solver_tol);
  CHECK(j["t_min"].get<double>() == sgtau::defaults::t_min);
  CHECK(j["quad_rel_tol"].get<double>() == sgtau::defaults::quad_rel_tol);
  CHECK(j["quad_rel_tol_2d"].get<double>() == sgtau::defaults::quad_rel_tol_2d);
  CHECK(j["action_lambda_nodes"].get<int>() == sgtau::defaults::action_lambda_nodes);
  CHECK(j["fd_step_nu"].get<double>() == sgtau::defaults::fd_step_nu);
  CHECK(j["fit_window"][0].get<double>() == sgtau::defaults::fit_window_lo);
  CHECK(j["fit_window"][1].get<double>() == sgtau::defaults::fit_window_hi);
}

TEST_CASE("CONNECT_TOL environment override") {
  auto r = run_cli("config");
  const auto base = nlohmann::json::parse(r.out);
  CHECK(base["solver_tol"].get<double>() == sgtau::defaults::solver_tol);
  ::setenv("CONNECT_TOL", "1e-10", 1);
  auto o = run_cli("config");
  ::unsetenv("CONNECT_TOL");
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["solver_tol"].get<double>() == 1e-10);
}

TEST_CASE("f2 subcommand") {
  auto r = run_cli("f2 --t 5 --nu 0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["f2"].get<double>() == doctest::Approx(-5.3404899302250398e-7).epsilon(1e-6));
  CHECK(!j["loss_of_precision"].get<bool>());
}

TEST_CASE("sweep produces the curve data") {
  auto r = run_cli("sweep --nu-list -0.25 0.5 --sigma-lo 0.1 --sigma-hi 0.9 -n 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nu,sigma,B,A") != std::string::npos);
  // B must change sign along nu = -0.25 (sign flip at sigma = 0.5)
  CHECK(r.out.find("-") != std::string::npos);
}
