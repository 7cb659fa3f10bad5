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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sustainrec/kernels.hpp"
#include "sustainrec/types.hpp"

namespace sustainrec {

struct ParityReport {
  std::map<std::string, double> per_item_gap;
  double max_gap = 0.0;
  double mean_gap = 0.0;
  double epsilon = 0.0;
  bool satisfied = true;
};

// Probability that a member of the group received the item; members with
// no recommendation list count in the denominator.
inline MetricValue exposure_probability(const Dataset& ds, const std::string& group,
                                        const std::string& item_id) {
  auto members = ds.members_of(group);
  if (members.empty()) return MetricValue::undefined("empty-group");
  std::int64_t exposed = 0;
  for (const UserRecord* u : members) {
    const RecommendationSet* rec = ds.recs_for(u->user_id);
    if (!rec) continue;
    for (const auto& i : rec->items)
      if (i == item_id) {
        ++exposed;
        break;
      }
  }
  return MetricValue::ok(static_cast<double>(exposed) / static_cast<double>(members.size()));
}

// Largest between-group exposure gap per recommended item. Items never
// recommended are outside the report's scope.
inline MetricValue demographic_parity(const Dataset& ds, double epsilon, ParityReport* out) {
  std::vector<std::string> groups;
  for (const auto& g : ds.effective_groups())
    if (!ds.members_of(g).empty()) groups.push_back(g);
  if (groups.size() < 2) return MetricValue::undefined("fewer-than-two-groups");

  std::set<std::string> items;
  for (const auto& rec : ds.recommendations)
    for (const auto& i : rec.items) items.insert(i);
  if (items.empty()) return MetricValue::undefined("no-recommendations");

  ParityReport report;
  report.epsilon = epsilon;
  double gap_sum = 0.0;
  for (const auto& item_id : items) {
    double lo = 1.0;
    double hi = 0.0;
    for (const auto& g : groups) {
      MetricValue p = exposure_probability(ds, g, item_id);
      double v = *p.value;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    double gap = hi - lo;
    report.per_item_gap[item_id] = gap;
    gap_sum += gap;
    if (gap > report.max_gap) report.max_gap = gap;
  }
  report.mean_gap = gap_sum / static_cast<double>(items.size());
  report.satisfied = report.max_gap <= epsilon;
  if (out) *out = report;
  return MetricValue::ok(report.max_gap);
}

inline MetricReport demographic_parity_report(const Dataset& ds, double epsilon) {
  ParityReport parity;
  MetricValue v = demographic_parity(ds, epsilon, &parity);
  MetricReport r = MetricReport::from("parity", v);
  if (v.defined()) {
    r.per_item = parity.per_item_gap;
    r.details["mean_gap"] = parity.mean_gap;
    r.details["epsilon"] = parity.epsilon;
    r.details["satisfied"] = parity.satisfied ? 1.0 : 0.0;
  }
  return r;
}

// One minus the mean pairwise similarity over ordered item pairs of the
// user's list.
inline MetricValue intra_list_diversity(const Dataset& ds, const std::string& user_id) {
  const RecommendationSet* rec = ds.recs_for(user_id);
  if (!rec || rec->items.size() < 2) return MetricValue::undefined("fewer-than-two-items");
  const std::size_t n = rec->items.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto s = ds.sim(rec->items[i], rec->items[j]);
      if (!s) return MetricValue::undefined("missing-similarity");
      sum += *s;
    }
  }
  return MetricValue::ok(1.0 - sum / static_cast<double>(n * (n - 1)));
}

inline MetricReport intra_list_diversity_report(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "listd";
  std::int64_t short_lists = 0;
  std::int64_t missing_sim = 0;
  double sum = 0.0;
  std::int64_t n = 0;
  for (const auto& rec : ds.recommendations) {
    MetricValue v = intra_list_diversity(ds, rec.user_id);
    if (!v.defined()) {
      if (v.reason == "fewer-than-two-items") ++short_lists;
      else ++missing_sim;
      continue;
    }
    r.per_user[rec.user_id] = *v.value;
    sum += *v.value;
    ++n;
  }
  if (!ds.recommendations.empty())
    r.coverage = static_cast<double>(n) / static_cast<double>(ds.recommendations.size());
  if (short_lists > 0)
    r.notes.push_back(std::to_string(short_lists) + " user(s) skipped: list shorter than 2");
  if (missing_sim > 0)
    r.notes.push_back(std::to_string(missing_sim) + " user(s) skipped: similarity unavailable");
  if (n == 0) {
    r.undefined_reason = "no-eligible-users";
    return r;
  }
  r.value = sum / static_cast<double>(n);
  return r;
}

// Relevance-weighted share of the list outside the user's familiar set.
// Unknown relevance contributes 0.
inline MetricValue serendipity(const Dataset& ds, const std::string& user_id,
                               std::int64_t* known_rel = nullptr) {
  const RecommendationSet* rec = ds.recs_for(user_id);
  const UserRecord* user = ds.user(user_id);
  if (!rec || !user || rec->items.empty()) return MetricValue::undefined("no-recommendations");
  std::set<std::string> familiar = ds.familiar_set(*user);
  double sum = 0.0;
  for (const auto& item_id : rec->items) {
    auto r = ds.rel(user_id, item_id);
    if (r && known_rel) ++*known_rel;
    if (familiar.count(item_id)) continue;
    sum += r ? *r : 0.0;
  }
  return MetricValue::ok(sum / static_cast<double>(rec->items.size()));
}

inline MetricReport serendipity_report(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "ser";
  double sum = 0.0;
  std::int64_t n = 0;
  std::int64_t known = 0;
  std::int64_t slots = 0;
  for (const auto& rec : ds.recommendations) {
    std::int64_t user_known = 0;
    MetricValue v = serendipity(ds, rec.user_id, &user_known);
    if (!v.defined()) continue;
    slots += static_cast<std::int64_t>(rec.items.size());
    known += user_known;
    r.per_user[rec.user_id] = *v.value;
    sum += *v.value;
    ++n;
  }
  if (n == 0) {
    r.undefined_reason = "no-recommendations";
    return r;
  }
  r.value = sum / static_cast<double>(n);
  if (slots > 0) r.coverage = static_cast<double>(known) / static_cast<double>(slots);
  if (known < slots)
    r.notes.push_back(std::to_string(slots - known) +
                      " slot(s) with unknown relevance treated as 0");
  return r;
}

// Mean audit score of the group across all audited artifacts.
inline MetricValue accessibility_score(const AccessibilityAudit& audit,
                                       const std::string& group) {
  if (audit.scores.empty()) return MetricValue::undefined("missing-score");
  double sum = 0.0;
  for (const auto& [artifact, per_group] : audit.scores) {
    auto it = per_group.find(group);
    if (it == per_group.end()) return MetricValue::undefined("missing-score");
    sum += it->second;
  }
  return MetricValue::ok(sum / static_cast<double>(audit.scores.size()));
}

inline MetricReport accessibility_report(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "acc";
  if (!ds.accessibility) {
    r.undefined_reason = "missing-table";
    return r;
  }
  std::int64_t incomplete = 0;
  double sum = 0.0;
  std::int64_t n = 0;
  for (const auto& g : ds.accessibility->groups()) {
    MetricValue v = accessibility_score(*ds.accessibility, g);
    if (!v.defined()) {
      ++incomplete;
      continue;
    }
    r.per_group[g] = *v.value;
    sum += *v.value;
    ++n;
  }
  if (incomplete > 0)
    r.notes.push_back(std::to_string(incomplete) + " group(s) skipped: unscored artifacts");
  if (n == 0) {
    r.undefined_reason = "missing-score";
    return r;
  }
  r.value = sum / static_cast<double>(n);
  return r;
}

// Largest pairwise gap between group accessibility scores.
inline MetricValue inclusivity_gap(const AccessibilityAudit& audit, double epsilon,
                                   bool* satisfied = nullptr,
                                   std::map<std::string, double>* per_group = nullptr) {
  double lo = 1.0;
  double hi = 0.0;
  std::int64_t n = 0;
  for (const auto& g : audit.groups()) {
    MetricValue v = accessibility_score(audit, g);
    if (!v.defined()) continue;
    if (per_group) (*per_group)[g] = *v.value;
    if (*v.value < lo) lo = *v.value;
    if (*v.value > hi) hi = *v.value;
    ++n;
  }
  if (n < 2) return MetricValue::undefined("fewer-than-two-groups");
  double gap = hi - lo;
  if (satisfied) *satisfied = gap <= epsilon;
  return MetricValue::ok(gap);
}

inline MetricReport inclusivity_report(const Dataset& ds, double epsilon) {
  MetricReport r;
  r.metric_name = "inclusivity";
  if (!ds.accessibility) {
    r.undefined_reason = "missing-table";
    return r;
  }
  bool satisfied = false;
  std::map<std::string, double> per_group;
  MetricValue v = inclusivity_gap(*ds.accessibility, epsilon, &satisfied, &per_group);
  MetricReport out = MetricReport::from("inclusivity", v);
  if (v.defined()) {
    out.per_group = per_group;
    out.details["epsilon"] = epsilon;
    out.details["satisfied"] = satisfied ? 1.0 : 0.0;
  }
  return out;
}

// Share of recommended slots holding a harmful item, among slots with a
// known flag.
inline MetricReport harmful_exposure_rate(const Dataset& ds) {
  return slot_rate(
      ds, "hier",
      [](const ItemRecord& it, const UserRecord&) { return it.is_harmful; },
      "no-harmful-flags");
}

// Relative change in the health outcome, oriented so that positive means
// the outcome moved in the better direction.
inline MetricValue health_improvement(const PairedObservation& p) {
  if (p.baseline == 0) return MetricValue::undefined("baseline-is-zero");
  double v = (p.treatment - p.baseline) / p.baseline;
  return MetricValue::ok(p.higher_is_better ? v : -v);
}

inline MetricReport health_improvement_report(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "hirec";
  if (!ds.has_paired_table) {
    r.undefined_reason = "missing-table";
    return r;
  }
  bool multiple = false;
  const PairedObservation* p = first_paired(ds, "health", &multiple);
  if (!p) {
    r.undefined_reason = "no-paired-observation";
    return r;
  }
  r = MetricReport::from("hirec", health_improvement(*p));
  if (!p->higher_is_better) r.notes.push_back("sign flipped: lower outcome is better");
  if (multiple) r.notes.push_back("multiple 'health' observations; using the first row");
  return r;
}

}  // namespace sustainrec
