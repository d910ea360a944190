// Copyright 2026 The epower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// epower: compute | scan | verify
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "epower/epower.hpp"
#include "epower/record.hpp"
#include "epower/verify.hpp"

namespace {

using epower::kPi;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr double kOracleGapTol = 1e-4;

struct ComputeArgs {
  std::vector<double> xyz;
  std::optional<double> example1;
  std::optional<double> example2;
  std::vector<double> phases;
  bool verify = false;
};

struct ScanArgs {
  double x = 0.0;
  double y = 0.0;
  int n = 401;
  int grid = 101;
};

struct CommonArgs {
  bool deg = false;
  bool json = false;
  bool timestamp = false;
  std::uint64_t seed = 0;
  std::optional<int> samples;
};

double to_rad(double v, bool deg) { return deg ? v * kPi / 180.0 : v; }

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_record(const epower::RunRecord& rec, bool as_json) {
  if (as_json) {
    fmt::print("{}\n", epower::to_json(rec).dump(2));
    return;
  }
  fmt::print("value_ebits: {}\n", rec.value_ebits);
  fmt::print("critical: {}\n", rec.critical);
  fmt::print("method: {}\n", rec.method);
  for (const auto& [k, v] : rec.residuals) fmt::print("  {}: {}\n", k, v);
}

int run_compute(const ComputeArgs& a, const CommonArgs& common) {
  const int given = (a.xyz.empty() ? 0 : 1) + (a.example1 ? 1 : 0) + (a.example2 ? 1 : 0) + (a.phases.empty() ? 0 : 1);
  if (given != 1) throw CLI::ValidationError("compute needs exactly one of --xyz, --example1, --example2, --phases");

  json params = json::object();
  epower::EntanglingPowerResult res;
  std::optional<epower::Matrix4c> gate;
  std::string command;

  if (!a.xyz.empty()) {
    const double x = to_rad(a.xyz[0], common.deg), y = to_rad(a.xyz[1], common.deg), z = to_rad(a.xyz[2], common.deg);
    params = {{"x", x}, {"y", y}, {"z", z}};
    command = "compute.xyz";
    const epower::CanonicalParams p(x, y, z);
    const auto c = epower::coefficients_from_xyz(p);
    if (std::abs(y - z) > epower::kChamberSlack && epower::schmidt_rank(c) == 4) {
      throw epower::DomainError("gates with c2 != c3 and Schmidt rank four are not supported");
    }
    res = epower::entangling_power_c2eqc3(x, y);
    gate = epower::assemble_unitary(c);
  } else if (a.example1) {
    const double x = to_rad(*a.example1, common.deg);
    params = {{"x", x}};
    command = "compute.example1";
    res = epower::example1_power(x);
    gate = epower::assemble_unitary(epower::coefficients_from_xyz(epower::CanonicalParams(x, x, x)));
  } else if (a.example2) {
    const double y = to_rad(*a.example2, common.deg);
    params = {{"y", y}};
    command = "compute.example2";
    res = epower::example2_power(y);
    gate = epower::assemble_unitary(epower::coefficients_from_xyz(epower::CanonicalParams(kPi / 4, y, y)));
  } else {
    std::vector<double> th;
    for (double t : a.phases) th.push_back(to_rad(t, common.deg));
    params = {{"phases", th}};
    command = "compute.phases";
    epower::PhaseGateOptions opts;
    opts.cross_check = a.verify;
    opts.seed = common.seed;
    res = epower::entangling_power_phase_gate(epower::PhaseGateSpec(th), opts);
  }

  int code = kExitOk;
  if (a.verify) {
    double gap = 0.0;
    if (gate) {
      epower::SearchConfig cfg;
      cfg.seed = common.seed;
      const auto orc = epower::brute_force_power(*gate, cfg);
      res.diagnostics["oracle_ebits"] = orc.value;
      gap = orc.value - res.value;
      res.diagnostics["oracle_gap"] = gap;
    } else {
      gap = res.diagnostics.at("oracle_gap");
    }
    if (std::abs(gap) > kOracleGapTol) code = kExitVerify;
  }
  auto rec = epower::make_record(command, params, res, common.seed);
  if (common.timestamp) rec.timestamp = now_iso8601();
  print_record(rec, common.json);
  if (!res.flags.empty() && !common.json) {
    for (const auto& f : res.flags) fmt::print("flag: {}\n", f);
  }
  if (a.verify && !common.json) {
    fmt::print("verify: {} (closed form vs oracle gap {})\n", code == kExitOk ? "ok" : "FAILED",
               res.diagnostics.at("oracle_gap"));
  }
  return code;
}

int run_scan(const std::string& what, const ScanArgs& s, const CommonArgs& common) {
  if (what == "line") {
    if (s.n < 2) throw epower::DomainError("--n must be at least 2");
    const double x = to_rad(s.x, common.deg), y = to_rad(s.y, common.deg);
    const auto c = epower::coefficients_from_xyz(epower::CanonicalParams(x, y, y));
    fmt::print("alpha,E\n");
    for (int i = 0; i < s.n; ++i) {
      const double a = (kPi / 4) * i / (s.n - 1);
      fmt::print("{},{}\n", a, epower::line_profile_value(c, a));
    }
    return kExitOk;
  }
  if (s.grid < 1) throw epower::DomainError("--grid must be positive");
  const bool f1 = what == "f1";
  fmt::print("y,csq,value\n");
  for (int j = 0; j < s.grid; ++j) {
    const double csq = f1 ? epower::f1_csq(j, s.grid) : epower::f2_csq(j, s.grid);
    for (int i = 0; i < s.grid; ++i) {
      const double yv = epower::scan_y(i, s.grid);
      fmt::print("{},{},{}\n", yv, csq, f1 ? epower::f1_value(yv, csq) : epower::f2_value(yv, csq));
    }
  }
  return kExitOk;
}

json case_json(const std::map<std::string, double>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

int run_verify(const CommonArgs& common) {
  epower::verify::Config cfg;
  cfg.seed = common.seed;
  cfg.samples = common.samples;
  const auto rep = epower::verify::run_all(cfg);
  int passed = 0;
  for (const auto& o : rep.outcomes) passed += o.passed ? 1 : 0;

  if (common.json) {
    json j;
    j["command"] = "verify";
    j["seed"] = rep.seed;
    j["samples"] = common.samples ? json(*common.samples) : json(nullptr);
    j["all_passed"] = rep.all_passed();
    j["properties"] = json::array();
    for (const auto& o : rep.outcomes) {
      j["properties"].push_back({{"name", o.name},
                                 {"passed", o.passed},
                                 {"checked", o.checked},
                                 {"worst", o.worst},
                                 {"tolerance", o.tolerance},
                                 {"findings", o.findings},
                                 {"note", o.note},
                                 {"case", case_json(o.failing_case)}});
    }
    j["timestamp"] = common.timestamp ? json(now_iso8601()) : json(nullptr);
    fmt::print("{}\n", j.dump(2));
  } else {
    for (const auto& o : rep.outcomes) {
      fmt::print("{} {} checked={} worst={:.3g} tol={:.0e}", o.passed ? "PASS" : "FAIL", o.name, o.checked, o.worst,
                 o.tolerance);
      if (o.findings > 0) fmt::print(" findings={}", o.findings);
      fmt::print("\n");
      if (!o.passed || o.findings > 0) {
        fmt::print("  case: {}{}\n", case_json(o.failing_case).dump(), o.note.empty() ? "" : "  (" + o.note + ")");
      }
    }
    fmt::print("verify: {}/{} properties passed (seed {})\n", passed, rep.outcomes.size(), rep.seed);
  }
  return rep.all_passed() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangling power of two-qubit c2=c3 gates and Schmidt-rank-two phase gates"};
  app.require_subcommand(1);
  CommonArgs common;
  ComputeArgs comp;
  ScanArgs scan;
  std::string scan_what;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--deg", common.deg, "angles are given in degrees");
    sub->add_flag("--json", common.json, "emit a JSON record");
    sub->add_flag("--timestamp", common.timestamp, "include an ISO-8601 timestamp in JSON output");
    sub->add_option("--seed", common.seed, "random seed")->envname("EPOWER_SEED");
  };

  auto* compute = app.add_subcommand("compute", "entangling power of one gate");
  add_common(compute);
  compute->add_option("--xyz", comp.xyz, "chamber angles x y z (y = z)")->expected(3);
  compute->add_option("--example1", comp.example1, "x for the x=y=z family");
  compute->add_option("--example2", comp.example2, "y for the x=pi/4, y=z family");
  compute->add_option("--phases", comp.phases, "comma-separated phases of a controlled-phase gate")->delimiter(',');
  compute->add_flag("--verify", comp.verify, "also run the numerical oracle and report the gap");

  auto* scan_cmd = app.add_subcommand("scan", "CSV scans of the line profile and derivative grids");
  add_common(scan_cmd);
  scan_cmd->add_option("what", scan_what, "line | f1 | f2")->required()->check(CLI::IsMember({"line", "f1", "f2"}));
  scan_cmd->add_option("--x", scan.x, "chamber x (line scan)");
  scan_cmd->add_option("--y", scan.y, "chamber y = z (line scan)");
  scan_cmd->add_option("--n", scan.n, "points on the line");
  scan_cmd->add_option("--grid", scan.grid, "grid points per axis for f1/f2");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--samples", common.samples, "cap on samples per suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(comp, common);
    if (scan_cmd->parsed()) return run_scan(scan_what, scan, common);
    return run_verify(common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const epower::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
}
