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

#include <cstdint>
#include <map>
#include <string>

#include "sustainrec/kernels.hpp"
#include "sustainrec/types.hpp"

namespace sustainrec {

// True when the event belongs to the configured sustainable set, either
// by behavior kind or by referencing a green item.
inline bool is_sustainable_event(const Dataset& ds, const BehaviorEvent& ev) {
  if (ds.sustainable_kinds.count(ev.behavior_kind)) return true;
  if (ds.sustainable_green_reference && ev.item_id) {
    const ItemRecord* item = ds.item(*ev.item_id);
    if (item && item->is_green && *item->is_green) return true;
  }
  return false;
}

// Share of logged behavior events that are sustainable, bag semantics.
inline MetricReport sustainable_behavior_score(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "sbs";
  if (!ds.has_behaviors_table) {
    r.undefined_reason = "missing-table";
    return r;
  }
  if (ds.behaviors.empty()) {
    r.undefined_reason = "no-behavior-events";
    return r;
  }
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> per_user;  // hits, total
  std::int64_t hits = 0;
  for (const auto& ev : ds.behaviors) {
    bool s = is_sustainable_event(ds, ev);
    hits += s ? 1 : 0;
    auto& [h, t] = per_user[ev.user_id];
    h += s ? 1 : 0;
    ++t;
  }
  r.value = static_cast<double>(hits) / static_cast<double>(ds.behaviors.size());
  for (const auto& [uid, ht] : per_user)
    r.per_user[uid] = static_cast<double>(ht.first) / static_cast<double>(ht.second);
  return r;
}

// Mean over users of their mean explanation interpretability.
inline MetricReport avg_interpretability(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "intp";
  if (!ds.has_explanations_table) {
    r.undefined_reason = "missing-table";
    return r;
  }
  if (ds.explanations.empty()) {
    r.undefined_reason = "no-explanations";
    return r;
  }
  std::map<std::string, std::pair<double, std::int64_t>> per_user;  // sum, count
  for (const auto& ex : ds.explanations) {
    auto& [sum, count] = per_user[ex.user_id];
    sum += ex.interpret_score;
    ++count;
  }
  double total = 0.0;
  for (const auto& [uid, sc] : per_user) {
    double mean = sc.first / static_cast<double>(sc.second);
    r.per_user[uid] = mean;
    total += mean;
  }
  r.value = total / static_cast<double>(per_user.size());
  return r;
}

// Mean over users of the mean life-cycle impact of their recommended
// items; same structure as the carbon-footprint average.
inline MetricReport avg_life_cycle_impact(const Dataset& ds) {
  return user_item_average(
      ds, "avglci", [](const ItemRecord& it) { return it.lci_score; }, "no-lci-data");
}

}  // namespace sustainrec
