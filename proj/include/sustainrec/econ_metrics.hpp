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
#include <optional>
#include <string>
#include <vector>

#include "sustainrec/kernels.hpp"
#include "sustainrec/types.hpp"

namespace sustainrec {

struct ExposureHistogram {
  std::map<std::string, std::int64_t> counts;  // producer_id -> slot occurrences
};

// Share of recommended slots holding an item local to the receiving user.
inline MetricReport local_business_rate(const Dataset& ds) {
  return slot_rate(
      ds, "lbpr",
      [&ds](const ItemRecord& it, const UserRecord& u) { return ds.item_local_to(it, u); },
      "locality-unresolvable");
}

// Loyalty of one user over their complete satisfaction series.
inline MetricValue user_loyalty(const Dataset& ds, const std::string& user_id,
                                std::optional<double> decay) {
  auto it = ds.satisfaction.find(user_id);
  if (it == ds.satisfaction.end() || it->second.empty())
    return MetricValue::undefined("no-series");
  auto complete = ds.satisfaction_complete.find(user_id);
  if (complete == ds.satisfaction_complete.end() || !complete->second)
    return MetricValue::undefined("incomplete-series");
  return MetricValue::ok(decayed_mean(it->second, decay));
}

inline MetricReport loyalty_report(const Dataset& ds, std::optional<double> decay) {
  MetricReport r;
  r.metric_name = "loyalty";
  if (!ds.has_satisfaction_table) {
    r.undefined_reason = "missing-table";
    return r;
  }
  std::int64_t incomplete = 0;
  double sum = 0.0;
  std::int64_t n = 0;
  for (const auto& [uid, values] : ds.satisfaction) {
    MetricValue v = user_loyalty(ds, uid, decay);
    if (!v.defined()) {
      ++incomplete;
      continue;
    }
    r.per_user[uid] = *v.value;
    sum += *v.value;
    ++n;
  }
  if (incomplete > 0)
    r.notes.push_back(std::to_string(incomplete) + " user(s) skipped: series incomplete");
  if (n == 0) {
    r.undefined_reason = "no-series";
    return r;
  }
  r.value = sum / static_cast<double>(n);
  if (!ds.satisfaction.empty())
    r.coverage = static_cast<double>(n) / static_cast<double>(ds.satisfaction.size());
  return r;
}

// Mean loyalty over users with a complete series.
inline MetricReport avg_loyalty(const Dataset& ds, std::optional<double> decay) {
  MetricReport r = loyalty_report(ds, decay);
  r.metric_name = "avgloyalty";
  if (r.defined()) r.details["n_users"] = static_cast<double>(r.per_user.size());
  r.per_user.clear();
  return r;
}

// Slot occurrences per producer, including catalog producers never
// recommended. Scope narrows to one item category when given.
inline ExposureHistogram exposure_histogram(const Dataset& ds,
                                            const std::optional<std::string>& category) {
  ExposureHistogram hist;
  auto in_scope = [&](const ItemRecord& it) {
    if (!category) return true;
    return it.category && *it.category == *category;
  };
  for (const auto& it : ds.catalog)
    if (it.producer_id && in_scope(it)) hist.counts[*it.producer_id];  // zero-initialized
  for (const auto& rec : ds.recommendations) {
    for (const auto& item_id : rec.items) {
      const ItemRecord* item = ds.item(item_id);
      if (!item || !item->producer_id || !in_scope(*item)) continue;
      ++hist.counts[*item->producer_id];
    }
  }
  return hist;
}

// Mean over max pairwise exposure distance across producers. 0 with a
// note when exposure is perfectly uniform.
inline MetricReport producer_exposure_fairness(const Dataset& ds,
                                               const std::optional<std::string>& category) {
  MetricReport r;
  r.metric_name = "pef";
  if (category && !ds.has_category_column) {
    r.undefined_reason = "no-category-column";
    return r;
  }
  ExposureHistogram hist = exposure_histogram(ds, category);
  std::vector<std::int64_t> counts;
  for (const auto& [producer, c] : hist.counts) counts.push_back(c);
  PairDistanceRatio ratio = pair_distance_ratio(counts);
  r = MetricReport::from("pef", ratio.value);
  for (const auto& [producer, c] : hist.counts)
    r.per_producer[producer] = static_cast<double>(c);
  if (ratio.uniform) r.notes.push_back("uniform exposure");
  if (r.defined()) {
    r.notes.push_back("lower = more uniform pairwise spread");
    r.details["n_producers"] = static_cast<double>(counts.size());
  }
  if (category) r.notes.push_back("scoped to category '" + *category + "'");
  return r;
}

}  // namespace sustainrec
