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

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "circulant/enumerate.hpp"
#include "circulant/errors.hpp"
#include "circulant/io.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/residues.hpp"
#include "circulant/type1.hpp"
#include "circulant/type2.hpp"

namespace circulant::fixtures {

using io::Json;

inline constexpr const char* kPrinted = "printed";
inline constexpr const char* kRegenerated = "regenerated";

enum class StatementKind { Type1, Type2 };

/// A family of claimed isomorphisms. Each pattern is a comma-separated jump
/// list in which "s" stands for every value of `s_values` in turn; with no
/// s values the patterns are literal.
struct Statement {
  std::string label;
  StatementKind kind = StatementKind::Type1;
  std::vector<std::string> patterns;
  std::vector<int> s_values;
  std::optional<int> m;
  std::string note;
  std::string provenance;
};

struct OrbitListing {
  std::string label;
  std::string context;
  int order = 0;
  std::vector<std::int64_t> seed;
  std::vector<std::vector<std::int64_t>> members;  // as printed, unreduced
  std::string provenance;
};

struct Witness {
  std::string label;
  std::vector<std::vector<std::int64_t>> members;
  std::string provenance;
};

struct FixtureFile {
  int order = 0;
  int k = 0;
  std::vector<Statement> statements;
  std::vector<OrbitListing> orbit_listings;
  std::vector<Witness> witnesses;
  std::optional<Json> regenerated;
  Json document;
};

namespace detail {

inline std::vector<std::int64_t> parse_pattern(const std::string& pattern, std::optional<int> s) {
  std::vector<std::int64_t> out;
  std::stringstream in(pattern);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token == "s") {
      if (!s) throw FixtureParseError("pattern '" + pattern + "' uses s but no s values are given");
      out.push_back(*s);
      continue;
    }
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw FixtureParseError("bad token '" + token + "' in pattern '" + pattern + "'");
    }
    out.push_back(v);
  }
  return out;
}

template <typename T>
T require(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw FixtureParseError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FixtureParseError(where + ": field '" + key + "': " + e.what());
  }
}

}  // namespace detail

/// Jump sets named by a statement, one group per s value.
inline std::vector<std::vector<JumpSet>> expand(const Statement& st, int order) {
  std::vector<std::optional<int>> values;
  if (st.s_values.empty()) values.push_back(std::nullopt);
  for (const int s : st.s_values) values.push_back(s);
  std::vector<std::vector<JumpSet>> out;
  for (const auto& s : values) {
    std::vector<JumpSet> group;
    for (const auto& p : st.patterns) {
      const auto raw = detail::parse_pattern(p, s);
      group.push_back(reflexive_reduce(order, std::span<const std::int64_t>(raw)));
    }
    out.push_back(std::move(group));
  }
  return out;
}

inline FixtureFile parse_fixture(const Json& doc) {
  FixtureFile f;
  f.document = doc;
  f.order = detail::require<int>(doc, "order", "fixture");
  f.k = detail::require<int>(doc, "k", "fixture");
  for (const Json& j : doc.value("statements", Json::array())) {
    Statement st;
    st.label = detail::require<std::string>(j, "label", "statement");
    const std::string where = "statement " + st.label;
    const auto kind = detail::require<std::string>(j, "kind", where);
    if (kind == "type1") st.kind = StatementKind::Type1;
    else if (kind == "type2") st.kind = StatementKind::Type2;
    else throw FixtureParseError(where + ": unknown kind '" + kind + "'");
    st.patterns = detail::require<std::vector<std::string>>(j, "patterns", where);
    st.s_values = j.value("s_values", std::vector<int>{});
    if (j.contains("m")) st.m = detail::require<int>(j, "m", where);
    st.note = j.value("note", std::string{});
    st.provenance = detail::require<std::string>(j, "provenance", where);
    f.statements.push_back(std::move(st));
  }
  for (const Json& j : doc.value("orbit_listings", Json::array())) {
    OrbitListing l;
    l.label = detail::require<std::string>(j, "label", "orbit listing");
    const std::string where = "orbit listing " + l.label;
    l.context = j.value("context", std::string{});
    l.order = detail::require<int>(j, "order", where);
    l.seed = detail::require<std::vector<std::int64_t>>(j, "seed", where);
    l.members = detail::require<std::vector<std::vector<std::int64_t>>>(j, "members", where);
    l.provenance = detail::require<std::string>(j, "provenance", where);
    f.orbit_listings.push_back(std::move(l));
  }
  for (const Json& j : doc.value("type2_witnesses", Json::array())) {
    Witness w;
    w.label = detail::require<std::string>(j, "label", "witness");
    const std::string where = "witness " + w.label;
    w.members = detail::require<std::vector<std::vector<std::int64_t>>>(j, "members", where);
    w.provenance = detail::require<std::string>(j, "provenance", where);
    f.witnesses.push_back(std::move(w));
  }
  if (doc.contains("regenerated")) f.regenerated = doc.at("regenerated");
  return f;
}

inline FixtureFile load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureParseError("cannot open fixture file " + path);
  try {
    return parse_fixture(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw FixtureParseError(path + ": " + e.what());
  }
}

/// The tool-computed layer: the Adam orbit of every listed seed and the full
/// Type-2 enumeration at the file's (order, k).
inline Json regenerate(const FixtureFile& f, int workers = 1) {
  Json out;
  out["provenance"] = kRegenerated;
  Json orbits = Json::array();
  for (const OrbitListing& l : f.orbit_listings) {
    Json o;
    o["label"] = l.label;
    o["order"] = l.order;
    const JumpSet seed = reflexive_reduce(l.order, std::span<const std::int64_t>(l.seed));
    o["seed"] = io::to_json(seed);
    o["members"] = io::to_json(adam_orbit(seed).members);
    orbits.push_back(o);
  }
  out["orbits"] = orbits;
  out["enumeration"] = io::to_json(enumerate_type2(f.order, f.k, {.workers = workers}));
  return out;
}

struct AppendixEntry {
  int order = 0;
  std::string label;
  std::string context;             // listing, solution, statement or witness
  std::vector<std::string> issues; // one line each
};

struct FileReport {
  int order = 0;
  int k = 0;
  bool regenerated_present = false;
  std::vector<std::string> regenerated_diffs;
  std::size_t listings_checked = 0;
  std::size_t listings_consistent = 0;
  std::size_t type1_groups = 0;
  std::size_t type1_confirmed = 0;
  std::size_t type2_groups = 0;
  std::size_t pair_count = 0;
  std::size_t triple_count = 0;
  CrossCheckResult cross;
  std::size_t witnesses_checked = 0;
  std::size_t witnesses_confirmed = 0;
  std::vector<AppendixEntry> appendix;

  bool mismatch() const {
    return !regenerated_present || !regenerated_diffs.empty() || !cross.fixture_only.empty() ||
           !cross.enumeration_only.empty();
  }
};

namespace detail {

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Printed listing against the computed orbit of its seed.
inline std::vector<std::string> listing_issues(const OrbitListing& l) {
  std::vector<std::string> issues;
  JumpSet seed = reflexive_reduce(l.order, std::span<const std::int64_t>(l.seed));
  const AdamOrbit orbit = adam_orbit(seed);
  std::set<JumpSet> printed;
  for (const auto& raw : l.members) {
    std::optional<JumpSet> r;
    try {
      r = reflexive_reduce(l.order, std::span<const std::int64_t>(raw));
    } catch (const Error&) {
    }
    if (!r || r->size() != seed.size()) {
      issues.push_back("malformed entry (" + join(raw) + ")");
      continue;
    }
    if (!printed.insert(*r).second) {
      issues.push_back("duplicate entry (" + r->to_string() + ")");
    } else if (!orbit.contains(*r)) {
      issues.push_back("entry (" + join(raw) + ") is not in the orbit");
    }
  }
  for (const JumpSet& m : orbit.members) {
    if (!printed.count(m)) issues.push_back("missing orbit member (" + m.to_string() + ")");
  }
  return issues;
}

}  // namespace detail

inline FileReport verify_file(const FixtureFile& f, int workers = 1) {
  FileReport rep;
  rep.order = f.order;
  rep.k = f.k;

  const Json fresh = regenerate(f, workers);
  rep.regenerated_present = f.regenerated.has_value();
  if (f.regenerated) {
    const Json& stored = *f.regenerated;
    const Json& stored_orbits = stored.contains("orbits") ? stored.at("orbits") : Json::array();
    const Json& fresh_orbits = fresh.at("orbits");
    for (std::size_t i = 0; i < fresh_orbits.size(); ++i) {
      if (i >= stored_orbits.size() || stored_orbits[i] != fresh_orbits[i]) {
        rep.regenerated_diffs.push_back("orbit " + fresh_orbits[i].at("label").get<std::string>());
      }
    }
    if (stored_orbits.size() > fresh_orbits.size()) rep.regenerated_diffs.push_back("extra stored orbits");
    if (!stored.contains("enumeration") || stored.at("enumeration") != fresh.at("enumeration")) {
      rep.regenerated_diffs.push_back("enumeration");
    }
  }

  for (const OrbitListing& l : f.orbit_listings) {
    ++rep.listings_checked;
    auto issues = detail::listing_issues(l);
    if (issues.empty()) {
      ++rep.listings_consistent;
    } else {
      rep.appendix.push_back({l.order, l.label, l.context, std::move(issues)});
    }
  }

  const EnumerationReport enumeration = enumerate_type2(f.order, f.k, {.workers = workers});
  rep.pair_count = enumeration.pair_count;
  rep.triple_count = enumeration.triple_count;

  std::vector<Type2Claim> claims;
  for (const Statement& st : f.statements) {
    std::vector<std::string> issues;
    if (!st.note.empty()) issues.push_back("note: " + st.note);
    for (auto& group : expand(st, f.order)) {
      if (st.kind == StatementKind::Type1) {
        ++rep.type1_groups;
        bool ok = true;
        for (std::size_t i = 1; i < group.size(); ++i) {
          const auto rec = classify(f.order, group[0], group[i]);
          if (!std::holds_alternative<verdict::Type1>(rec.verdict)) {
            ok = false;
            issues.push_back("(" + group[0].to_string() + ") and (" + group[i].to_string() + ") are " +
                             verdict_name(rec.verdict) + ", not Type1");
          }
        }
        if (ok) ++rep.type1_confirmed;
      } else {
        ++rep.type2_groups;
        std::string label = st.label;
        for (const auto& s : group) label += " (" + s.to_string() + ")";
        std::sort(group.begin(), group.end());
        if (st.m) {
          for (const Type2Class& c : enumeration.type2_classes) {
            if (c.members != group) continue;
            for (const Type2Link& l : c.links) {
              if (l.m != *st.m) issues.push_back(label + ": found with m = " + std::to_string(l.m));
            }
          }
        }
        claims.push_back({std::move(label), std::move(group)});
      }
    }
    if (!issues.empty()) {
      rep.appendix.push_back({f.order, st.label, "statement", std::move(issues)});
    }
  }
  rep.cross = cross_check(enumeration, claims);

  for (const Witness& w : f.witnesses) {
    ++rep.witnesses_checked;
    std::vector<std::string> issues;
    std::vector<JumpSet> sets;
    for (const auto& raw : w.members) {
      try {
        sets.push_back(reflexive_reduce(f.order, std::span<const std::int64_t>(raw)));
      } catch (const Error&) {
        issues.push_back("malformed member (" + detail::join(raw) + ")");
      }
    }
    if (issues.empty()) {
      const bool found = std::any_of(
          enumeration.type2_classes.begin(), enumeration.type2_classes.end(), [&](const Type2Class& c) {
            return std::all_of(sets.begin(), sets.end(), [&](const JumpSet& s) {
              return std::binary_search(c.members.begin(), c.members.end(), s);
            });
          });
      if (!found) {
        std::string names;
        for (const auto& s : sets) names += " (" + s.to_string() + ")";
        std::string verdicts;
        for (std::size_t i = 1; i < sets.size(); ++i) {
          verdicts += std::string(i > 1 ? ", " : "") + verdict_name(classify(f.order, sets[0], sets[i]).verdict);
        }
        issues.push_back("members" + names + " do not form a Type-2 class; classify gives " + verdicts);
      }
    }
    if (issues.empty()) {
      ++rep.witnesses_confirmed;
    } else {
      rep.appendix.push_back({f.order, w.label, "witness", std::move(issues)});
    }
  }
  return rep;
}

inline Json to_json(const FileReport& r) {
  Json out;
  out["order"] = r.order;
  out["k"] = r.k;
  out["regenerated_present"] = r.regenerated_present;
  out["regenerated_diffs"] = r.regenerated_diffs;
  out["listings_checked"] = r.listings_checked;
  out["listings_consistent"] = r.listings_consistent;
  out["type1_groups"] = r.type1_groups;
  out["type1_confirmed"] = r.type1_confirmed;
  out["type2_groups"] = r.type2_groups;
  out["pair_count"] = r.pair_count;
  out["triple_count"] = r.triple_count;
  out["type2_matching"] = r.cross.matching.size();
  out["type2_fixture_only"] = r.cross.fixture_only;
  Json extra = Json::array();
  for (const auto& members : r.cross.enumeration_only) extra.push_back(io::to_json(members));
  out["type2_enumeration_only"] = extra;
  out["witnesses_checked"] = r.witnesses_checked;
  out["witnesses_confirmed"] = r.witnesses_confirmed;
  Json appendix = Json::array();
  for (const AppendixEntry& e : r.appendix) {
    Json je;
    je["order"] = e.order;
    je["label"] = e.label;
    je["context"] = e.context;
    je["issues"] = e.issues;
    appendix.push_back(je);
  }
  out["appendix"] = appendix;
  out["mismatch"] = r.mismatch();
  return out;
}

inline std::string to_text(const std::vector<FileReport>& reports) {
  std::ostringstream out;
  for (const FileReport& r : reports) {
    out << "== order " << r.order << " (k = " << r.k << ") ==\n";
    out << "regenerated layer: "
        << (!r.regenerated_present ? "absent" : r.regenerated_diffs.empty() ? "matches" : "DIFFERS") << "\n";
    for (const auto& d : r.regenerated_diffs) out << "  differs: " << d << "\n";
    out << "orbit listings: " << r.listings_consistent << "/" << r.listings_checked << " self-consistent\n";
    out << "type1 statements: " << r.type1_confirmed << "/" << r.type1_groups << " confirmed\n";
    out << "type2 statements: " << r.cross.matching.size() << "/" << r.type2_groups
        << " match enumerated classes\n";
    out << "enumeration: pairs " << r.pair_count << ", triples " << r.triple_count << ", unclaimed "
        << r.cross.enumeration_only.size() << "\n";
    for (const auto& l : r.cross.fixture_only) out << "  not found: " << l << "\n";
    out << "witnesses: " << r.witnesses_confirmed << "/" << r.witnesses_checked << " confirmed\n";
    out << "result: " << (r.mismatch() ? "MISMATCH" : "ok") << "\n\n";
  }
  out << "== appendix: printed-table discrepancies ==\n";
  std::size_t count = 0;
  for (const FileReport& r : reports) {
    for (const AppendixEntry& e : r.appendix) {
      ++count;
      out << "[" << e.order << " " << e.context << " " << e.label << "]\n";
      for (const auto& i : e.issues) out << "  " << i << "\n";
    }
  }
  if (count == 0) out << "(none)\n";
  return out.str();
}

}  // namespace circulant::fixtures
