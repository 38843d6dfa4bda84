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
#include <cstdio>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "circulant/enumerate.hpp"
#include "circulant/jump_set.hpp"
#include "circulant/oracle.hpp"
#include "circulant/permutation.hpp"
#include "circulant/type1.hpp"
#include "circulant/type2.hpp"

namespace circulant::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const JumpSet& s) { return Json(std::vector<int>(s.jumps().begin(), s.jumps().end())); }

inline Json to_json(const VertexPermutation& p) {
  return Json(std::vector<int>(p.image().begin(), p.image().end()));
}

inline Json to_json(const std::vector<JumpSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

inline Json to_json(const ClassificationRecord& rec) {
  Json out;
  out["n"] = rec.n;
  out["r"] = to_json(rec.r);
  out["s"] = to_json(rec.s);
  out["verdict"] = verdict_name(rec.verdict);
  if (const auto* t1 = std::get_if<verdict::Type1>(&rec.verdict)) {
    out["unit"] = t1->unit;
  } else if (const auto* t2 = std::get_if<verdict::Type2>(&rec.verdict)) {
    out["m"] = t2->m;
    out["t"] = t2->t;
    out["certificate"] = to_json(t2->certificate);
  }
  return out;
}

inline Json to_json(const AdamOrbit& orbit) {
  Json out;
  out["n"] = orbit.n;
  out["representative"] = to_json(orbit.representative());
  out["size"] = orbit.size();
  out["members"] = to_json(orbit.members);
  return out;
}

inline Json to_json(const Type2Link& l) {
  Json out;
  out["from"] = to_json(l.from);
  out["to"] = to_json(l.to);
  out["m"] = l.m;
  out["t"] = l.t;
  return out;
}

/// Timing is left out unless asked for so that output stays byte-stable.
inline Json to_json(const EnumerationReport& r, bool include_timing = false) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["jumpsets"] = r.stats.jumpsets;
  out["orbit_count"] = r.orbit_count;
  out["pair_count"] = r.pair_count;
  out["triple_count"] = r.triple_count;
  Json sizes = Json::object();
  for (const auto& [size, count] : r.class_sizes) sizes[std::to_string(size)] = count;
  out["class_sizes"] = sizes;
  out["m_values"] = r.m_values;
  Json classes = Json::array();
  for (const Type2Class& c : r.type2_classes) {
    Json jc;
    jc["members"] = to_json(c.members);
    Json links = Json::array();
    for (const Type2Link& l : c.links) links.push_back(to_json(l));
    jc["links"] = links;
    classes.push_back(jc);
  }
  out["classes"] = classes;
  Json stats;
  stats["theta_evaluations"] = r.stats.theta_evaluations;
  stats["circulant_images"] = r.stats.circulant_images;
  stats["links"] = r.stats.links;
  if (include_timing) stats["elapsed_ms"] = r.stats.elapsed_ms;
  out["stats"] = stats;
  return out;
}

inline Json to_json(const OracleVerdict& v) {
  Json out;
  out["result"] = oracle_result_name(v.result);
  out["distinguisher"] = v.distinguisher;
  out["expansions"] = v.expansions;
  if (v.permutation) out["permutation"] = to_json(*v.permutation);
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline constexpr const char* kCsvHeader = "n,memberA,memberB,memberC,m,t";

/// One row per class. memberC is empty for pairs; m and t come from the
/// class's least (m, t) link.
inline std::string to_csv(const EnumerationReport& r) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const Type2Class& c : r.type2_classes) {
    const auto best = std::min_element(c.links.begin(), c.links.end(), [](const auto& a, const auto& b) {
      return std::tie(a.m, a.t) < std::tie(b.m, b.t);
    });
    out << r.n;
    for (std::size_t i = 0; i < 3; ++i) {
      out << ',';
      if (i < c.members.size()) out << '"' << c.members[i].to_string() << '"';
    }
    out << ',' << best->m << ',' << best->t << "\n";
  }
  return out.str();
}

inline std::string summary(const EnumerationReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n"
      << "k: " << r.k << "\n"
      << "jump sets: " << r.stats.jumpsets << "\n"
      << "orbits: " << r.orbit_count << "\n"
      << "pairs: " << r.pair_count << "\n"
      << "triples: " << r.triple_count << "\n";
  for (const auto& [size, count] : r.class_sizes) {
    if (size > 3) out << "classes of size " << size << ": " << count << "\n";
  }
  out << "m values:";
  for (const int m : r.m_values) out << ' ' << m;
  out << "\n";
  return out.str();
}

inline std::string to_text(const ClassificationRecord& rec) {
  std::ostringstream out;
  out << "C_" << rec.n << "(" << rec.r.to_string() << ") vs C_" << rec.n << "(" << rec.s.to_string()
      << "): " << verdict_name(rec.verdict);
  if (const auto* t1 = std::get_if<verdict::Type1>(&rec.verdict)) out << " x=" << t1->unit;
  if (const auto* t2 = std::get_if<verdict::Type2>(&rec.verdict)) out << " m=" << t2->m << " t=" << t2->t;
  out << "\n";
  return out.str();
}

}  // namespace circulant::io
