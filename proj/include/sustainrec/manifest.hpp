/*
 * Copyright 2026 The sustainrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sustainrec/csv.hpp"
#include "sustainrec/types.hpp"

namespace sustainrec {

inline const std::vector<std::string>& known_table_names() {
  static const std::vector<std::string> kNames = {
      "catalog",       "users",    "recommendations", "relevance",
      "similarity",    "item_features", "energy",     "paired",
      "accessibility", "satisfaction",  "behaviors",  "explanations"};
  return kNames;
}

/*
 * Parsed manifest document: table paths plus the declared units, group
 * universe, behavior set, column bindings and tolerances.
 */
struct DatasetManifest {
  std::string base_dir;
  std::map<std::string, std::string> tables;  // logical name -> path
  Units units;
  double satisfaction_min = 0.0;
  double satisfaction_max = 1.0;
  std::vector<std::string> groups;
  std::set<std::string> sustainable_kinds;
  bool sustainable_green_reference = false;
  std::string green_column = "is_green";
  std::string harmful_column = "is_harmful";
  std::string label_column = "sustainability_label";
  std::string is_local_column;   // empty = not bound
  std::string category_column;   // empty = not bound
  double epsilon = 0.05;
  std::optional<double> decay;
  FamiliarPolicy familiar_policy = FamiliarPolicy::kExplicit;
  std::map<std::string, bool> paired_higher_is_better;

  std::string path_of(const std::string& table) const {
    auto it = tables.find(table);
    if (it == tables.end()) return {};
    if (!it->second.empty() && it->second.front() == '/') return it->second;
    return base_dir.empty() ? it->second : base_dir + "/" + it->second;
  }
  bool has_table(const std::string& table) const { return tables.count(table) > 0; }
};

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::string& path, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw SchemaError(path, 1, "unknown " + where + " field '" + it.key() + "'");
}

}  // namespace detail

inline DatasetManifest parse_manifest(const nlohmann::json& doc, const std::string& path,
                                      const std::string& base_dir) {
  DatasetManifest m;
  m.base_dir = base_dir;
  if (!doc.is_object()) throw SchemaError(path, 1, "manifest must be a JSON object");
  detail::require_keys(doc,
                       {"tables", "units", "satisfaction_scale", "groups",
                        "sustainable_behaviors", "bindings", "epsilon", "decay",
                        "familiar_set_policy", "paired_higher_is_better"},
                       path, "manifest");

  if (!doc.contains("tables") || !doc["tables"].is_object())
    throw SchemaError(path, 1, "manifest needs a 'tables' object");
  for (auto it = doc["tables"].begin(); it != doc["tables"].end(); ++it) {
    bool known = false;
    for (const auto& n : known_table_names()) known = known || n == it.key();
    if (!known) throw SchemaError(path, 1, "unknown table '" + it.key() + "'");
    if (it.value().is_null()) continue;
    if (!it.value().is_string())
      throw SchemaError(path, 1, "table path for '" + it.key() + "' must be a string");
    m.tables[it.key()] = it.value().get<std::string>();
  }
  if (!m.has_table("catalog")) throw SchemaError(path, 1, "manifest must name a catalog table");

  if (doc.contains("units")) {
    const auto& u = doc["units"];
    detail::require_keys(u, {"energy", "carbon", "data"}, path, "units");
    if (u.contains("energy")) m.units.energy = u["energy"].get<std::string>();
    if (u.contains("carbon")) m.units.carbon = u["carbon"].get<std::string>();
    if (u.contains("data")) m.units.data = u["data"].get<std::string>();
  }

  if (doc.contains("satisfaction_scale")) {
    const auto& s = doc["satisfaction_scale"];
    detail::require_keys(s, {"min", "max"}, path, "satisfaction_scale");
    if (s.contains("min")) m.satisfaction_min = s["min"].get<double>();
    if (s.contains("max")) m.satisfaction_max = s["max"].get<double>();
    if (!(m.satisfaction_max > m.satisfaction_min))
      throw SchemaError(path, 1, "satisfaction_scale.max must exceed min");
  }

  if (doc.contains("groups")) {
    for (const auto& g : doc["groups"]) m.groups.push_back(g.get<std::string>());
    std::sort(m.groups.begin(), m.groups.end());
    m.groups.erase(std::unique(m.groups.begin(), m.groups.end()), m.groups.end());
  }

  if (doc.contains("sustainable_behaviors")) {
    const auto& s = doc["sustainable_behaviors"];
    detail::require_keys(s, {"kinds", "green_item_reference"}, path, "sustainable_behaviors");
    if (s.contains("kinds"))
      for (const auto& k : s["kinds"]) m.sustainable_kinds.insert(k.get<std::string>());
    if (s.contains("green_item_reference"))
      m.sustainable_green_reference = s["green_item_reference"].get<bool>();
  }

  if (doc.contains("bindings")) {
    const auto& b = doc["bindings"];
    detail::require_keys(b, {"green", "harmful", "label", "is_local", "category"}, path,
                         "bindings");
    auto bind = [&](const char* key, std::string& target) {
      if (b.contains(key) && !b[key].is_null()) target = b[key].get<std::string>();
    };
    bind("green", m.green_column);
    bind("harmful", m.harmful_column);
    bind("label", m.label_column);
    bind("is_local", m.is_local_column);
    bind("category", m.category_column);
  }

  if (doc.contains("epsilon")) {
    m.epsilon = doc["epsilon"].get<double>();
    if (!(m.epsilon > 0)) throw SchemaError(path, 1, "epsilon must be > 0");
  }

  if (doc.contains("decay") && !doc["decay"].is_null()) {
    m.decay = doc["decay"].get<double>();
    if (!(*m.decay > 0 && *m.decay <= 1))
      throw SchemaError(path, 1, "decay must be in (0,1]");
  }

  if (doc.contains("familiar_set_policy")) {
    std::string p = doc["familiar_set_policy"].get<std::string>();
    if (p == "explicit") m.familiar_policy = FamiliarPolicy::kExplicit;
    else if (p == "explicit_plus_behaviors")
      m.familiar_policy = FamiliarPolicy::kExplicitPlusBehaviors;
    else
      throw SchemaError(path, 1, "unknown familiar_set_policy '" + p + "'");
  }

  if (doc.contains("paired_higher_is_better")) {
    for (auto it = doc["paired_higher_is_better"].begin();
         it != doc["paired_higher_is_better"].end(); ++it) {
      if (it.key() != "energy" && it.key() != "reuse_rate" && it.key() != "health")
        throw SchemaError(path, 1, "unknown paired kind '" + it.key() + "'");
      m.paired_higher_is_better[it.key()] = it.value().get<bool>();
    }
  }

  return m;
}

inline DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path, 1, e.what());
  }
  std::string base_dir;
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) base_dir = path.substr(0, slash);
  try {
    return parse_manifest(doc, path, base_dir);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path, 1, e.what());
  }
}

}  // namespace sustainrec
