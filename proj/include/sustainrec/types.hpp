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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sustainrec {

// ---- catalog and logs ------------------------------------------------------

struct ItemRecord {
  std::string item_id;
  std::optional<double> carbon_footprint;  // kg CO2e per lifecycle (unit from manifest)
  std::optional<bool> is_green;
  std::optional<bool> is_harmful;
  std::optional<double> lci_score;         // dimensionless life-cycle impact
  std::optional<std::string> producer_id;
  std::optional<std::string> producer_region;
  std::optional<bool> sustainability_label;
  std::optional<bool> is_local;            // overrides region matching when present
  std::optional<std::string> category;
};

struct UserRecord {
  std::string user_id;
  std::vector<std::string> group_ids;      // sorted, unique
  std::optional<std::string> region;
  std::set<std::string> familiar_items;
};

struct RecommendationSet {
  std::string user_id;
  std::vector<std::string> items;          // rank order, no duplicates
  std::optional<std::string> timestamp;
};

struct EnergyLedger {
  double e_inference_kwh = 0.0;
  std::int64_t n_rec = 0;
  double ec_build_kwh = 0.0;
  std::int64_t n_epoch = 0;
  std::int64_t n_data_processed = 0;
};

struct PairedObservation {
  std::string kind;                        // energy | reuse_rate | health
  double baseline = 0.0;
  double treatment = 0.0;
  std::string unit;
  bool higher_is_better = true;
};

struct AccessibilityAudit {
  // scores[artifact][group] = satisfaction of the criteria set, in [0,1]
  std::map<std::string, std::map<std::string, double>> scores;

  std::vector<std::string> groups() const {
    std::set<std::string> gs;
    for (const auto& [artifact, per_group] : scores)
      for (const auto& [g, s] : per_group) gs.insert(g);
    return {gs.begin(), gs.end()};
  }
};

struct BehaviorEvent {
  std::string user_id;
  std::string behavior_kind;
  std::optional<std::string> item_id;
  std::optional<std::string> timestamp;
};

struct ExplanationRecord {
  std::string user_id;
  std::string explanation_id;
  double interpret_score = 0.0;            // in [0,1]
};

// Raw table rows, kept alongside the derived maps so validation can see
// duplicates and serialization can emit a canonical row order.
struct RecRow {
  std::string user_id;
  std::int64_t rank = 0;
  std::string item_id;
  std::optional<std::string> timestamp;
};

struct RelevanceRow {
  std::string user_id;
  std::string item_id;
  double relevance = 0.0;
};

struct SimilarityRow {
  std::string item_a;
  std::string item_b;
  double sim = 0.0;
};

struct SatisfactionRow {
  std::string user_id;
  std::int64_t t = 0;
  double value = 0.0;  // normalized to [0,1] at ingest
};

struct AccessibilityRow {
  std::string artifact_id;
  std::string group;
  double score = 0.0;
};

// ---- manifest-carried configuration ----------------------------------------

struct Units {
  std::string energy = "kWh";
  std::string carbon = "kgCO2e";
  std::string data = "record";
};

enum class FamiliarPolicy {
  kExplicit,                // familiar_items column only
  kExplicitPlusBehaviors,   // union with items referenced by the user's events
};

// ---- dataset snapshot -------------------------------------------------------

/*
 * Immutable bundle of every ingested table plus the manifest knobs the
 * metrics need. Lookups go through the sorted index maps so iteration
 * order is stable everywhere.
 */
struct Dataset {
  std::vector<ItemRecord> catalog;              // sorted by item_id
  std::vector<UserRecord> users;                // sorted by user_id
  std::vector<RecommendationSet> recommendations;  // sorted by user_id, from rec_rows

  std::vector<RecRow> rec_rows;
  std::vector<RelevanceRow> relevance_rows;
  std::vector<SimilarityRow> similarity_rows;
  std::vector<SatisfactionRow> satisfaction_rows;
  std::vector<AccessibilityRow> accessibility_rows;

  std::map<std::pair<std::string, std::string>, double> relevance;   // (user,item)
  std::map<std::pair<std::string, std::string>, double> similarity;  // key (min,max)
  std::map<std::string, std::vector<double>> item_features;
  bool has_similarity_table = false;
  bool has_item_features = false;
  bool has_relevance_table = false;
  bool has_satisfaction_table = false;
  bool has_accessibility_table = false;
  bool has_paired_table = false;

  std::optional<EnergyLedger> energy;
  std::vector<PairedObservation> paired;
  std::optional<AccessibilityAudit> accessibility;
  std::map<std::string, std::vector<double>> satisfaction;  // user -> values, t = 1..T
  std::map<std::string, bool> satisfaction_complete;        // contiguous t starting at 1
  std::vector<BehaviorEvent> behaviors;
  std::vector<ExplanationRecord> explanations;
  bool has_behaviors_table = false;
  bool has_explanations_table = false;

  std::vector<std::string> group_universe;      // sorted; empty = derive from users
  std::map<std::string, bool> paired_higher_is_better;
  std::set<std::string> sustainable_kinds;
  bool sustainable_green_reference = false;
  double epsilon = 0.05;
  std::optional<double> decay;
  FamiliarPolicy familiar_policy = FamiliarPolicy::kExplicit;
  Units units;
  bool has_category_column = false;
  bool has_is_local_column = false;

  std::map<std::string, std::size_t> item_index;
  std::map<std::string, std::size_t> user_index;
  std::map<std::string, std::size_t> rec_index;  // user_id -> recommendations slot

  void rebuild_indexes() {
    item_index.clear();
    user_index.clear();
    rec_index.clear();
    for (std::size_t i = 0; i < catalog.size(); ++i) item_index[catalog[i].item_id] = i;
    for (std::size_t i = 0; i < users.size(); ++i) user_index[users[i].user_id] = i;
    for (std::size_t i = 0; i < recommendations.size(); ++i)
      rec_index[recommendations[i].user_id] = i;
  }

  // Sorts the entity vectors and rebuilds every derived structure from the
  // raw rows. Safe to call repeatedly.
  void finalize() {
    std::stable_sort(catalog.begin(), catalog.end(),
                     [](const ItemRecord& a, const ItemRecord& b) { return a.item_id < b.item_id; });
    std::stable_sort(users.begin(), users.end(),
                     [](const UserRecord& a, const UserRecord& b) { return a.user_id < b.user_id; });
    for (auto& u : users) {
      std::sort(u.group_ids.begin(), u.group_ids.end());
      u.group_ids.erase(std::unique(u.group_ids.begin(), u.group_ids.end()), u.group_ids.end());
    }

    recommendations.clear();
    {
      std::vector<RecRow> rows = rec_rows;
      std::stable_sort(rows.begin(), rows.end(), [](const RecRow& a, const RecRow& b) {
        if (a.user_id != b.user_id) return a.user_id < b.user_id;
        return a.rank < b.rank;
      });
      for (const auto& row : rows) {
        if (recommendations.empty() || recommendations.back().user_id != row.user_id) {
          recommendations.push_back(RecommendationSet{row.user_id, {}, row.timestamp});
        }
        recommendations.back().items.push_back(row.item_id);
        if (!recommendations.back().timestamp && row.timestamp)
          recommendations.back().timestamp = row.timestamp;
      }
    }

    relevance.clear();
    for (const auto& r : relevance_rows) relevance[{r.user_id, r.item_id}] = r.relevance;

    similarity.clear();
    for (const auto& s : similarity_rows) {
      auto key = s.item_a < s.item_b ? std::make_pair(s.item_a, s.item_b)
                                     : std::make_pair(s.item_b, s.item_a);
      similarity[key] = s.sim;
    }

    satisfaction.clear();
    satisfaction_complete.clear();
    {
      std::vector<SatisfactionRow> rows = satisfaction_rows;
      std::stable_sort(rows.begin(), rows.end(), [](const SatisfactionRow& a, const SatisfactionRow& b) {
        if (a.user_id != b.user_id) return a.user_id < b.user_id;
        return a.t < b.t;
      });
      std::map<std::string, std::vector<std::int64_t>> ts;
      for (const auto& row : rows) {
        satisfaction[row.user_id].push_back(row.value);
        ts[row.user_id].push_back(row.t);
      }
      for (const auto& [uid, seq] : ts) {
        bool complete = true;
        for (std::size_t i = 0; i < seq.size(); ++i)
          if (seq[i] != static_cast<std::int64_t>(i) + 1) complete = false;
        satisfaction_complete[uid] = complete;
      }
    }

    if (has_accessibility_table) {
      AccessibilityAudit audit;
      for (const auto& row : accessibility_rows)
        audit.scores[row.artifact_id][row.group] = row.score;
      accessibility = audit;
    } else {
      accessibility.reset();
    }

    rebuild_indexes();
  }

  const ItemRecord* item(const std::string& id) const {
    auto it = item_index.find(id);
    return it == item_index.end() ? nullptr : &catalog[it->second];
  }
  const UserRecord* user(const std::string& id) const {
    auto it = user_index.find(id);
    return it == user_index.end() ? nullptr : &users[it->second];
  }
  const RecommendationSet* recs_for(const std::string& user_id) const {
    auto it = rec_index.find(user_id);
    return it == rec_index.end() ? nullptr : &recommendations[it->second];
  }

  std::optional<double> rel(const std::string& user_id, const std::string& item_id) const {
    auto it = relevance.find({user_id, item_id});
    if (it == relevance.end()) return std::nullopt;
    return it->second;
  }

  // Pairwise similarity: table lookup first, then cosine over features.
  std::optional<double> sim(const std::string& a, const std::string& b) const {
    if (a == b) return 1.0;
    if (has_similarity_table) {
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      auto it = similarity.find(key);
      if (it != similarity.end()) return it->second;
    }
    if (has_item_features) {
      auto fa = item_features.find(a);
      auto fb = item_features.find(b);
      if (fa != item_features.end() && fb != item_features.end())
        return cosine(fa->second, fb->second);
    }
    return std::nullopt;
  }

  // Groups actually in play: the declared universe, else the observed labels.
  std::vector<std::string> effective_groups() const {
    if (!group_universe.empty()) return group_universe;
    std::set<std::string> gs;
    for (const auto& u : users)
      for (const auto& g : u.group_ids) gs.insert(g);
    return {gs.begin(), gs.end()};
  }

  std::vector<const UserRecord*> members_of(const std::string& group) const {
    std::vector<const UserRecord*> out;
    for (const auto& u : users)
      for (const auto& g : u.group_ids)
        if (g == group) {
          out.push_back(&u);
          break;
        }
    return out;
  }

  // Familiar set under the manifest policy.
  std::set<std::string> familiar_set(const UserRecord& u) const {
    std::set<std::string> out = u.familiar_items;
    if (familiar_policy == FamiliarPolicy::kExplicitPlusBehaviors) {
      for (const auto& ev : behaviors)
        if (ev.user_id == u.user_id && ev.item_id) out.insert(*ev.item_id);
    }
    return out;
  }

  // Locality of an item for a user; nullopt when not resolvable.
  std::optional<bool> item_local_to(const ItemRecord& item, const UserRecord& u) const {
    if (has_is_local_column) return item.is_local;
    if (!item.producer_region || !u.region) return std::nullopt;
    return ascii_lower(*item.producer_region) == ascii_lower(*u.region);
  }

  static std::string ascii_lower(std::string s) {
    for (char& c : s)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
  }

  static double cosine(const std::vector<double>& x, const std::vector<double>& y) {
    double dot = 0, nx = 0, ny = 0;
    std::size_t n = x.size() < y.size() ? x.size() : y.size();
    for (std::size_t i = 0; i < n; ++i) {
      dot += x[i] * y[i];
      nx += x[i] * x[i];
      ny += y[i] * y[i];
    }
    for (std::size_t i = n; i < x.size(); ++i) nx += x[i] * x[i];
    for (std::size_t i = n; i < y.size(); ++i) ny += y[i] * y[i];
    if (nx == 0 || ny == 0) return 0.0;
    return dot / (std::sqrt(nx) * std::sqrt(ny));
  }
};

// ---- metric results ---------------------------------------------------------

/*
 * Value of one scalar computation: either a number or a reason slug
 * explaining why the inputs leave it undefined.
 */
struct MetricValue {
  std::optional<double> value;
  std::string reason;  // nonempty iff value is absent

  static MetricValue ok(double v) { return {v, {}}; }
  static MetricValue undefined(std::string why) { return {std::nullopt, std::move(why)}; }
  bool defined() const { return value.has_value(); }
};

/*
 * Dataset-level result for one named metric, with the breakdowns and
 * coverage annotations the report emits.
 */
struct MetricReport {
  std::string metric_name;
  std::optional<double> value;
  std::string undefined_reason;                 // nonempty iff value is absent
  std::map<std::string, double> per_user;
  std::map<std::string, double> per_group;
  std::map<std::string, double> per_item;
  std::map<std::string, double> per_producer;
  std::optional<double> coverage;               // fraction of entities with enough data
  std::map<std::string, double> details;        // named auxiliary scalars
  std::vector<std::string> notes;

  bool defined() const { return value.has_value(); }

  static MetricReport from(std::string name, const MetricValue& v) {
    MetricReport r;
    r.metric_name = std::move(name);
    if (v.defined()) r.value = v.value;
    else r.undefined_reason = v.reason;
    return r;
  }
};

// Runtime overrides on top of manifest defaults.
struct EvalConfig {
  std::optional<double> epsilon;
  std::optional<double> decay;
  std::optional<std::string> pef_category;
  int threads = 1;
};

inline double effective_epsilon(const Dataset& ds, const EvalConfig& cfg) {
  return cfg.epsilon ? *cfg.epsilon : ds.epsilon;
}

inline std::optional<double> effective_decay(const Dataset& ds, const EvalConfig& cfg) {
  return cfg.decay ? cfg.decay : ds.decay;
}

// ---- metric registry --------------------------------------------------------

struct MetricInfo {
  const char* name;
  const char* pillar;   // environmental | social | economic | crosscutting | audit
  const char* inputs;   // comma list of tables/fields the metric reads
};

inline const std::vector<MetricInfo>& metric_registry() {
  static const std::vector<MetricInfo> kRegistry = {
      {"avgcarfi", "environmental", "recommendations,catalog.carbon_footprint"},
      {"girec", "environmental", "recommendations,catalog.is_green"},
      {"ecrec", "environmental", "energy.e_inference_kwh,energy.n_rec"},
      {"ectrain", "environmental", "energy.ec_build_kwh,energy.n_epoch"},
      {"ecpdat", "environmental", "energy.ec_build_kwh,energy.n_data_processed"},
      {"estrec", "environmental", "paired.energy"},
      {"rtr", "environmental", "paired.reuse_rate"},
      {"parity", "social", "recommendations,users.group_ids"},
      {"listd", "social", "recommendations,similarity"},
      {"ser", "social", "recommendations,relevance,users.familiar_items"},
      {"acc", "social", "accessibility"},
      {"inclusivity", "social", "accessibility"},
      {"hier", "social", "recommendations,catalog.is_harmful"},
      {"hirec", "social", "paired.health"},
      {"lbpr", "economic", "recommendations,catalog.producer_region,users.region"},
      {"loyalty", "economic", "satisfaction"},
      {"avgloyalty", "economic", "satisfaction"},
      {"pef", "economic", "recommendations,catalog.producer_id"},
      {"sbs", "crosscutting", "behaviors,sustainable_kinds"},
      {"intp", "crosscutting", "explanations"},
      {"avglci", "crosscutting", "recommendations,catalog.lci_score"},
      {"labelcoverage", "audit", "catalog.sustainability_label"},
  };
  return kRegistry;
}

inline bool is_known_metric(const std::string& name) {
  for (const auto& m : metric_registry())
    if (name == m.name) return true;
  return false;
}

}  // namespace sustainrec
