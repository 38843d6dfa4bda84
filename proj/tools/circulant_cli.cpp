// Copyright 2026 The circulant-iso Authors
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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "circulant/enumerate.hpp"
#include "circulant/errors.hpp"
#include "circulant/families.hpp"
#include "circulant/fixtures.hpp"
#include "circulant/io.hpp"
#include "circulant/oracle.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"
#include "circulant/type2.hpp"

#ifndef CIRCULANT_FIXTURE_DIR
#define CIRCULANT_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace circulant;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnresolved = 3;
constexpr int kExitMismatch = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_jumps(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + token + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(flag + ": expected a comma-separated jump list");
  return out;
}

JumpSet jumps_flag(const std::string& flag, int n, const std::string& text) {
  const auto raw = parse_jumps(flag, text);
  try {
    return reflexive_reduce(n, std::span<const std::int64_t>(raw));
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("--out: cannot write " + out_path);
  out << text;
}

struct Options {
  int n = 0;
  int k = 3;
  int m = 0;
  int t = 0;
  int p = 3;
  int n_max = 12;
  int workers = 1;
  std::string r;
  std::string s;
  std::string format;  // per-command default when empty
  std::string out;
  std::string theorem;
  std::string fixtures = CIRCULANT_FIXTURE_DIR;
  std::vector<int> only;
  std::uint64_t budget = kDefaultOracleBudget;
  std::optional<std::uint64_t> shuffle_seed;
  bool timing = false;
  bool write_regenerated = false;
};

int cmd_classify(const Options& o) {
  const JumpSet r = jumps_flag("--r", o.n, o.r);
  const JumpSet s = jumps_flag("--s", o.n, o.s);
  const auto rec = classify(o.n, r, s);
  emit(o.format == "text" ? io::to_text(rec) : io::dump(io::to_json(rec)), o.out);
  return rec.resolved() ? kExitOk : kExitUnresolved;
}

int cmd_orbit(const Options& o) {
  const AdamOrbit orbit = adam_orbit(jumps_flag("--r", o.n, o.r));
  if (o.format == "text") {
    std::ostringstream text;
    for (const auto& m : orbit.members) text << m.to_string() << "\n";
    emit(text.str(), o.out);
  } else {
    emit(io::dump(io::to_json(orbit)), o.out);
  }
  return kExitOk;
}

int cmd_theta(const Options& o) {
  const JumpSet r = jumps_flag("--r", o.n, o.r);
  const ThetaParams params(o.n, o.m, o.t);
  const auto image = theta_image(CirculantGraph(r), params);
  io::Json out;
  out["n"] = o.n;
  out["m"] = o.m;
  out["t"] = o.t;
  out["r"] = io::to_json(r);
  out["circulant"] = image.has_value();
  out["image"] = image ? io::to_json(*image) : io::Json();
  if (image) out["adam_related"] = same_orbit(r, *image).has_value();
  if (o.format == "text") {
    std::ostringstream text;
    text << "theta_{" << o.n << "," << o.m << "," << o.t << "}(C_" << o.n << "(" << r.to_string() << ")) = ";
    if (!image) {
      text << "not circulant\n";
    } else {
      text << "C_" << o.n << "(" << image->to_string() << ")"
           << (out["adam_related"].get<bool>() ? " [same orbit]" : "") << "\n";
    }
    emit(text.str(), o.out);
  } else {
    emit(io::dump(out), o.out);
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  EnumerationOptions opts;
  opts.workers = o.workers;
  opts.shuffle_seed = o.shuffle_seed;
  const EnumerationReport rep = enumerate_type2(o.n, o.k, opts);
  std::string body;
  if (o.format == "csv") body = io::to_csv(rep);
  else if (o.format == "text") body = io::summary(rep);
  else body = io::dump(io::to_json(rep, o.timing));
  if (o.out.empty()) {
    std::cout << body;
  } else {
    emit(o.format == "text" ? io::dump(io::to_json(rep, o.timing)) : body, o.out);
    std::cout << io::summary(rep);
  }
  return kExitOk;
}

int cmd_families(const Options& o) {
  std::ostringstream text;
  io::Json rows = io::Json::array();
  bool all = true;
  int instances = 0;
  int failures = 0;
  auto tally = [&](bool passed) {
    ++instances;
    if (!passed) ++failures;
    all = all && passed;
  };
  if (o.theorem == "8n") {
    text << "order  n  s  R            S            fwd(n) fwd(3n) rev(n) rev(3n) distinct  status\n";
    for (int n = 2; n <= o.n_max; ++n) {
      for (int s = 1; s <= n; ++s) {
        const auto inst = family_8n(n, s);
        const auto c = check_family_8n(inst);
        tally(c.passed());
        const std::string status = !c.passed() ? "FAIL" : c.degenerate ? "identical" : "pass";
        char line[160];
        std::snprintf(line, sizeof line, "%-6d %-2d %-2d %-12s %-12s %-6s %-7s %-6s %-7s %-9s %s\n",
                      inst.order(), n, s, inst.r.to_string().c_str(), inst.s_set.to_string().c_str(),
                      c.forward_n ? "ok" : "no", c.forward_3n ? "ok" : "no", c.reverse_n ? "ok" : "no",
                      c.reverse_3n ? "ok" : "no", c.outside_orbit ? "yes" : "no", status.c_str());
        text << line;
        io::Json row;
        row["order"] = inst.order();
        row["n"] = n;
        row["s"] = s;
        row["r"] = io::to_json(inst.r);
        row["s_set"] = io::to_json(inst.s_set);
        row["status"] = status;
        rows.push_back(row);
      }
    }
  } else if (o.theorem == "np3") {
    text << "order  n  p  x  y   action-failures orbit-collisions collapsed status\n";
    for (int n = 1; n <= o.n_max; ++n) {
      for (int x = 1; x <= o.p - 1; ++x) {
        for (int y = 0; y <= n * o.p - 1; ++y) {
          if (x + static_cast<std::int64_t>(y) * o.p > static_cast<std::int64_t>(n) * o.p * o.p - 1) continue;
          const auto c = check_family_np3(n, o.p, x, y);
          tally(c.passed());
          char line[160];
          std::snprintf(line, sizeof line, "%-6d %-2d %-2d %-2d %-3d %-15d %-16d %-9d %s\n",
                        n * o.p * o.p * o.p, n, o.p, x, y, c.action_failures, c.orbit_collisions,
                        c.collapsed, c.passed() ? "pass" : "FAIL");
          text << line;
          io::Json row;
          row["order"] = n * o.p * o.p * o.p;
          row["n"] = n;
          row["p"] = o.p;
          row["x"] = x;
          row["y"] = y;
          row["action_failures"] = c.action_failures;
          row["orbit_collisions"] = c.orbit_collisions;
          row["collapsed"] = c.collapsed;
          row["status"] = c.passed() ? "pass" : "FAIL";
          rows.push_back(row);
        }
      }
    }
  } else {
    throw UsageError("--theorem: expected '8n' or 'np3'");
  }
  text << "instances: " << instances << "  failures: " << failures << "\n";
  emit(o.format == "json" ? io::dump(rows) : text.str(), o.out);
  return all ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o) {
  const fs::path dir(o.fixtures);
  if (!fs::is_directory(dir)) throw UsageError("--fixtures: no such directory " + dir.string());
  std::vector<fs::path> files;
  if (o.only.empty()) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("--fixtures: no fixture files in " + dir.string());
  } else {
    for (const int n : o.only) {
      const fs::path p = dir / ("c" + std::to_string(n) + ".json");
      if (!fs::exists(p)) throw UsageError("--only: missing fixture file " + p.string());
      files.push_back(p);
    }
  }

  std::vector<fixtures::FileReport> reports;
  for (const auto& path : files) {
    auto f = fixtures::load_fixture(path.string());
    if (o.write_regenerated) {
      f.document["regenerated"] = fixtures::regenerate(f, o.workers);
      std::ofstream out(path);
      out << f.document.dump(1) << "\n";
      f = fixtures::parse_fixture(f.document);
    }
    reports.push_back(fixtures::verify_file(f, o.workers));
  }

  const auto mismatches = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.mismatch(); });
  if (o.format == "json") {
    io::Json all = io::Json::array();
    for (const auto& r : reports) all.push_back(fixtures::to_json(r));
    emit(io::dump(all), o.out);
  } else {
    emit(fixtures::to_text(reports) + "mismatches: " + std::to_string(mismatches) + "\n", o.out);
  }
  return mismatches > 0 ? kExitMismatch : kExitOk;
}

int cmd_oracle(const Options& o) {
  const CirculantGraph a(jumps_flag("--r", o.n, o.r));
  const CirculantGraph b(jumps_flag("--s", o.n, o.s));
  const OracleVerdict v = brute_force_iso(a, b, o.budget);
  if (o.format == "text") {
    emit(std::string(oracle_result_name(v.result)) + " (" + v.distinguisher + ")\n", o.out);
  } else {
    emit(io::dump(io::to_json(v)), o.out);
  }
  return v.result == OracleResult::Timeout ? kExitUnresolved : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphism tools for circulant graphs"};
  app.require_subcommand(1);
  Options o;

  auto order = [&](CLI::App* c) { c->add_option("--n", o.n, "Order of the circulant")->required(); };
  auto format = [&](CLI::App* c, const std::vector<std::string>& choices) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices));
  };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write output to this file"); };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a pair of jump sets");
  order(classify_cmd);
  classify_cmd->add_option("--r", o.r, "First jump list, e.g. 1,2,23")->required();
  classify_cmd->add_option("--s", o.s, "Second jump list")->required();
  format(classify_cmd, {"json", "text"});
  out(classify_cmd);

  auto* orbit_cmd = app.add_subcommand("orbit", "Adam orbit of a jump set");
  order(orbit_cmd);
  orbit_cmd->add_option("--r", o.r, "Jump list")->required();
  format(orbit_cmd, {"json", "text"});
  out(orbit_cmd);

  auto* theta_cmd = app.add_subcommand("theta", "Apply theta_{n,m,t} to C_n(R)");
  order(theta_cmd);
  theta_cmd->add_option("--m", o.m, "Modulus m")->required();
  theta_cmd->add_option("--t", o.t, "Multiplier t")->required();
  theta_cmd->add_option("--r", o.r, "Jump list")->required();
  format(theta_cmd, {"json", "text"});
  out(theta_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "Find all Type-2 classes among k-jump circulants");
  order(enum_cmd);
  enum_cmd->add_option("--k", o.k, "Number of jumps")->capture_default_str();
  enum_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  enum_cmd->add_option("--shuffle-seed", o.shuffle_seed, "Visit jump sets in a shuffled order");
  enum_cmd->add_flag("--timing", o.timing, "Include elapsed time in JSON output");
  format(enum_cmd, {"json", "csv", "text"});
  out(enum_cmd);

  auto* fam_cmd = app.add_subcommand("families", "Sweep the infinite Type-2 families");
  fam_cmd->add_option("--theorem", o.theorem, "Family: 8n or np3")->required();
  fam_cmd->add_option("--n-max", o.n_max, "Largest n in the sweep")->capture_default_str();
  fam_cmd->add_option("--p", o.p, "Odd prime for the np3 family")->capture_default_str();
  format(fam_cmd, {"json", "text"});
  out(fam_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Check bundled fixtures against recomputation");
  verify_cmd->add_option("--fixtures", o.fixtures, "Fixture directory")->capture_default_str();
  verify_cmd->add_option("--only", o.only, "Restrict to these orders");
  verify_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--write-regenerated", o.write_regenerated, "Rewrite the regenerated layer first");
  format(verify_cmd, {"json", "text"});
  out(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force isomorphism test");
  order(oracle_cmd);
  oracle_cmd->add_option("--r", o.r, "First jump list")->required();
  oracle_cmd->add_option("--s", o.s, "Second jump list")->required();
  oracle_cmd->add_option("--budget", o.budget, "Node-expansion budget")->capture_default_str();
  format(oracle_cmd, {"json", "text"});
  out(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.format.empty()) {
    o.format = (enum_cmd->parsed() || fam_cmd->parsed() || verify_cmd->parsed()) ? "text" : "json";
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (orbit_cmd->parsed()) return cmd_orbit(o);
    if (theta_cmd->parsed()) return cmd_theta(o);
    if (enum_cmd->parsed()) return cmd_enumerate(o);
    if (fam_cmd->parsed()) return cmd_families(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (oracle_cmd->parsed()) return cmd_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FixtureParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
