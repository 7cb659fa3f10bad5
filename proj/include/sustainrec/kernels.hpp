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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sustainrec/types.hpp"

namespace sustainrec {

/*
 * Double average over users then recommended items, skipping items whose
 * attribute is unknown and users whose whole list is unknown. Shared by
 * the carbon-footprint and life-cycle metrics.
 */
inline MetricReport user_item_average(
    const Dataset& ds, const std::string& name,
    const std::function<std::optional<double>(const ItemRecord&)>& attr,
    const std::string& empty_reason) {
  MetricReport report;
  report.metric_name = name;
  std::int64_t known_slots = 0;
  std::int64_t total_slots = 0;
  std::int64_t excluded_users = 0;
  double sum_of_means = 0.0;
  std::int64_t included_users = 0;
  for (const auto& rec : ds.recommendations) {
    double sum = 0.0;
    std::int64_t known = 0;
    for (const auto& item_id : rec.items) {
      ++total_slots;
      const ItemRecord* item = ds.item(item_id);
      if (!item) continue;
      auto v = attr(*item);
      if (!v) continue;
      sum += *v;
      ++known;
      ++known_slots;
    }
    if (known == 0) {
      ++excluded_users;
      continue;
    }
    double mean = sum / static_cast<double>(known);
    report.per_user[rec.user_id] = mean;
    sum_of_means += mean;
    ++included_users;
  }
  if (total_slots > 0)
    report.coverage = static_cast<double>(known_slots) / static_cast<double>(total_slots);
  if (included_users == 0) {
    report.undefined_reason = empty_reason;
    return report;
  }
  report.value = sum_of_means / static_cast<double>(included_users);
  if (excluded_users > 0)
    report.notes.push_back(std::to_string(excluded_users) +
                           " user(s) excluded: attribute unknown for their whole list");
  return report;
}

/*
 * Share of recommendation slots satisfying a per-(item,user) predicate,
 * over the slots where the predicate is decidable. Shared by the green,
 * harmful and local-business rates.
 */
inline MetricReport slot_rate(
    const Dataset& ds, const std::string& name,
    const std::function<std::optional<bool>(const ItemRecord&, const UserRecord&)>& pred,
    const std::string& empty_reason) {
  MetricReport report;
  report.metric_name = name;
  std::int64_t hits = 0;
  std::int64_t known = 0;
  std::int64_t total = 0;
  for (const auto& rec : ds.recommendations) {
    const UserRecord* user = ds.user(rec.user_id);
    if (!user) continue;
    std::int64_t user_hits = 0;
    std::int64_t user_known = 0;
    for (const auto& item_id : rec.items) {
      ++total;
      const ItemRecord* item = ds.item(item_id);
      if (!item) continue;
      auto p = pred(*item, *user);
      if (!p) continue;
      ++user_known;
      user_hits += *p ? 1 : 0;
    }
    known += user_known;
    hits += user_hits;
    if (user_known > 0)
      report.per_user[rec.user_id] =
          static_cast<double>(user_hits) / static_cast<double>(user_known);
  }
  if (total > 0) report.coverage = static_cast<double>(known) / static_cast<double>(total);
  if (known == 0) {
    report.undefined_reason = empty_reason;
    report.per_user.clear();
    return report;
  }
  report.value = static_cast<double>(hits) / static_cast<double>(known);
  return report;
}

/*
 * Ratio of mean to max pairwise absolute count distance. The all-equal
 * case has no defined ratio; it reports 0 with the uniform flag set.
 */
struct PairDistanceRatio {
  MetricValue value;
  bool uniform = false;
};

inline PairDistanceRatio pair_distance_ratio(const std::vector<std::int64_t>& counts) {
  PairDistanceRatio out;
  if (counts.size() < 2) {
    out.value = MetricValue::undefined("fewer-than-two-producers");
    return out;
  }
  double sum = 0.0;
  double maxd = 0.0;
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = i + 1; j < counts.size(); ++j) {
      double d = static_cast<double>(counts[i] > counts[j] ? counts[i] - counts[j]
                                                           : counts[j] - counts[i]);
      sum += d;
      if (d > maxd) maxd = d;
      ++pairs;
    }
  }
  if (maxd == 0.0) {
    out.value = MetricValue::ok(0.0);
    out.uniform = true;
    return out;
  }
  out.value = MetricValue::ok((sum / static_cast<double>(pairs)) / maxd);
  return out;
}

// Mean of a series, recency-weighted by decay^(T-t) when decay is given.
inline double decayed_mean(const std::vector<double>& values, std::optional<double> decay) {
  if (values.empty()) return 0.0;
  if (!decay) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
  }
  const std::size_t T = values.size();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    double w = 1.0;
    for (std::size_t p = 0; p < T - t; ++p) w *= *decay;
    num += w * values[t - 1];
    den += w;
  }
  return num / den;
}

// First observation of the given kind; sets multiple when more exist.
inline const PairedObservation* first_paired(const Dataset& ds, const std::string& kind,
                                             bool* multiple = nullptr) {
  const PairedObservation* found = nullptr;
  for (const auto& p : ds.paired) {
    if (p.kind != kind) continue;
    if (!found) {
      found = &p;
    } else if (multiple) {
      *multiple = true;
    }
  }
  return found;
}

}  // namespace sustainrec
