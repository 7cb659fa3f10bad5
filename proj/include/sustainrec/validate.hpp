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

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sustainrec/types.hpp"

namespace sustainrec {

struct Violation {
  bool hard = true;  // hard violations make the dataset unusable
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  std::size_t hard_count() const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.hard ? 1 : 0;
    return n;
  }
  bool usable() const { return hard_count() == 0; }

  std::string summary(std::size_t limit = 5) const {
    std::string out;
    std::size_t shown = 0;
    for (const auto& v : violations) {
      if (!v.hard) continue;
      if (shown == limit) {
        out += "  ...\n";
        break;
      }
      out += "  " + v.where + ": " + v.message + "\n";
      ++shown;
    }
    return out;
  }
};

namespace detail {

inline void add(ValidationReport& r, bool hard, std::string where, std::string msg) {
  r.violations.push_back(Violation{hard, std::move(where), std::move(msg)});
}

}  // namespace detail

// Cross-table consistency checks. Violations are data, not failures: the
// caller decides whether a dataset with hard violations is refused.
inline ValidationReport validate_dataset(const Dataset& ds) {
  ValidationReport report;
  using detail::add;

  for (std::size_t i = 1; i < ds.catalog.size(); ++i)
    if (ds.catalog[i].item_id == ds.catalog[i - 1].item_id)
      add(report, true, "catalog:" + ds.catalog[i].item_id, "duplicate item_id");
  for (std::size_t i = 1; i < ds.users.size(); ++i)
    if (ds.users[i].user_id == ds.users[i - 1].user_id)
      add(report, true, "users:" + ds.users[i].user_id, "duplicate user_id");

  std::set<std::string> universe(ds.group_universe.begin(), ds.group_universe.end());
  for (const auto& u : ds.users) {
    if (!universe.empty())
      for (const auto& g : u.group_ids)
        if (!universe.count(g))
          add(report, true, "users:" + u.user_id, "group '" + g + "' not in declared universe");
    for (const auto& fi : u.familiar_items)
      if (!ds.item(fi))
        add(report, true, "users:" + u.user_id, "familiar item '" + fi + "' not in catalog");
  }

  {
    std::set<std::pair<std::string, std::int64_t>> ranks;
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& row : ds.rec_rows) {
      std::string where = "recommendations:" + row.user_id;
      if (!ds.user(row.user_id)) add(report, true, where, "unknown user_id");
      if (!ds.item(row.item_id)) add(report, true, where, "unknown item_id '" + row.item_id + "'");
      if (row.rank < 1) add(report, true, where, "rank must be >= 1");
      if (!ranks.insert({row.user_id, row.rank}).second)
        add(report, true, where, "duplicate rank " + std::to_string(row.rank));
      if (!pairs.insert({row.user_id, row.item_id}).second)
        add(report, true, where, "item '" + row.item_id + "' listed twice");
    }
  }

  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& row : ds.relevance_rows) {
      std::string where = "relevance:" + row.user_id + "/" + row.item_id;
      if (!ds.user(row.user_id)) add(report, true, where, "unknown user_id");
      if (!ds.item(row.item_id)) add(report, true, where, "unknown item_id");
      if (row.relevance < 0.0 || row.relevance > 1.0)
        add(report, true, where, "relevance out of [0,1]");
      if (!seen.insert({row.user_id, row.item_id}).second)
        add(report, true, where, "duplicate judgment");
    }
  }

  {
    std::map<std::pair<std::string, std::string>, double> seen;
    for (const auto& row : ds.similarity_rows) {
      std::string where = "similarity:" + row.item_a + "/" + row.item_b;
      if (!ds.item(row.item_a)) add(report, true, where, "unknown item_id '" + row.item_a + "'");
      if (!ds.item(row.item_b)) add(report, true, where, "unknown item_id '" + row.item_b + "'");
      if (row.sim < 0.0 || row.sim > 1.0) add(report, true, where, "similarity out of [0,1]");
      if (row.item_a == row.item_b && row.sim != 1.0)
        add(report, true, where, "self-similarity must be 1");
      auto key = row.item_a < row.item_b ? std::make_pair(row.item_a, row.item_b)
                                         : std::make_pair(row.item_b, row.item_a);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, row.sim);
      } else if (it->second != row.sim) {
        add(report, true, where, "conflicting similarity values");
      } else {
        add(report, false, where, "duplicate similarity row");
      }
    }
  }

  for (const auto& [item_id, feats] : ds.item_features) {
    if (!ds.item(item_id))
      add(report, true, "item_features:" + item_id, "unknown item_id");
    for (double f : feats)
      if (f < 0.0) {
        add(report, true, "item_features:" + item_id, "negative feature value");
        break;
      }
  }

  if (ds.energy) {
    if (ds.energy->e_inference_kwh < 0 || ds.energy->ec_build_kwh < 0 ||
        ds.energy->n_rec < 0 || ds.energy->n_epoch < 0 || ds.energy->n_data_processed < 0)
      add(report, true, "energy", "negative quantity");
  }

  for (const auto& p : ds.paired) {
    std::string where = "paired:" + p.kind;
    if (p.kind != "energy" && p.kind != "reuse_rate" && p.kind != "health") {
      add(report, true, where, "unknown kind");
      continue;
    }
    if (p.kind == "energy" && (p.baseline < 0 || p.treatment < 0))
      add(report, true, where, "energy values must be >= 0");
    if (p.kind == "reuse_rate" &&
        (p.baseline < 0 || p.baseline > 1 || p.treatment < 0 || p.treatment > 1))
      add(report, true, where, "reuse rates out of [0,1]");
  }

  {
    std::map<std::pair<std::string, std::string>, double> seen;
    std::set<std::string> groups_seen;
    for (const auto& row : ds.accessibility_rows) {
      std::string where = "accessibility:" + row.artifact_id + "/" + row.group;
      if (row.score < 0.0 || row.score > 1.0) add(report, true, where, "score out of [0,1]");
      if (!universe.empty() && !universe.count(row.group))
        add(report, true, where, "group not in declared universe");
      groups_seen.insert(row.group);
      auto it = seen.find({row.artifact_id, row.group});
      if (it == seen.end()) {
        seen.emplace(std::make_pair(row.artifact_id, row.group), row.score);
      } else if (it->second != row.score) {
        add(report, true, where, "conflicting scores");
      }
    }
    if (ds.accessibility) {
      for (const auto& [artifact, per_group] : ds.accessibility->scores)
        for (const auto& g : groups_seen)
          if (!per_group.count(g))
            add(report, false, "accessibility:" + artifact,
                "not scored for group '" + g + "'");
    }
  }

  {
    std::set<std::pair<std::string, std::int64_t>> seen;
    for (const auto& row : ds.satisfaction_rows) {
      std::string where = "satisfaction:" + row.user_id;
      if (!ds.user(row.user_id)) add(report, true, where, "unknown user_id");
      if (row.t < 1) add(report, true, where, "t must be >= 1");
      if (row.value < 0.0 || row.value > 1.0)
        add(report, true, where, "value outside declared scale");
      if (!seen.insert({row.user_id, row.t}).second)
        add(report, true, where, "duplicate period " + std::to_string(row.t));
    }
    for (const auto& [uid, complete] : ds.satisfaction_complete)
      if (!complete)
        add(report, false, "satisfaction:" + uid, "series has gaps; skipped by loyalty");
  }

  for (const auto& ev : ds.behaviors) {
    std::string where = "behaviors:" + ev.user_id;
    if (!ds.user(ev.user_id)) add(report, true, where, "unknown user_id");
    if (ev.behavior_kind.empty()) add(report, true, where, "empty behavior kind");
    if (ev.item_id && !ds.item(*ev.item_id))
      add(report, true, where, "unknown item_id '" + *ev.item_id + "'");
  }

  {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& ex : ds.explanations) {
      std::string where = "explanations:" + ex.user_id + "/" + ex.explanation_id;
      if (!ds.user(ex.user_id)) add(report, true, where, "unknown user_id");
      if (ex.interpret_score < 0.0 || ex.interpret_score > 1.0)
        add(report, true, where, "score out of [0,1]");
      if (!seen.insert({ex.user_id, ex.explanation_id}).second)
        add(report, true, where, "duplicate explanation_id");
    }
  }

  return report;
}

}  // namespace sustainrec
