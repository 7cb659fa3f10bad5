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
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sustainrec/types.hpp"

namespace sustainrec {

/*
 * Seeded generator with explicit integer-to-real mappings. The engine
 * algorithm (mt19937_64) has a standardized output sequence and the
 * mappings below avoid std::uniform_*_distribution, whose results vary
 * across standard libraries, so identical seeds reproduce identical
 * datasets everywhere.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0,1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in [0,n) by rejection, bias-free.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % n;
  }

  bool coin(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::int64_t n_users = 10;
  std::int64_t n_items = 30;
  std::int64_t n_groups = 2;
  std::int64_t n_producers = 3;
  std::int64_t list_min = 2;
  std::int64_t list_max = 5;
  std::map<std::string, double> missingness;  // field -> rate in [0,1]
  double sustainable_fraction = 0.5;
  std::int64_t behaviors_per_user = 3;
  std::int64_t horizon = 4;
  std::int64_t n_artifacts = 2;
  std::int64_t explanations_per_user = 2;
  bool with_similarity = true;
  bool with_energy = true;
  bool with_paired = true;
  bool with_accessibility = true;
  bool with_satisfaction = true;
  bool with_behaviors = true;
  bool with_explanations = true;

  double missing(const std::string& field, double fallback = 0.2) const {
    auto it = missingness.find(field);
    return it == missingness.end() ? fallback : it->second;
  }
};

namespace detail {

inline std::string padded(const std::string& prefix, std::int64_t i) {
  std::string digits = std::to_string(i);
  while (digits.size() < 3) digits = "0" + digits;
  return prefix + digits;
}

}  // namespace detail

// Deterministic dataset for the given config; same seed, same dataset.
inline Dataset generate(const SynthConfig& cfg) {
  Rng rng(cfg.seed);
  Dataset ds;

  std::vector<std::string> regions = {"north", "south", "east", "west"};
  std::vector<std::string> groups;
  for (std::int64_t g = 0; g < cfg.n_groups; ++g) groups.push_back(detail::padded("g", g));
  std::vector<std::string> producers;
  for (std::int64_t p = 0; p < cfg.n_producers; ++p)
    producers.push_back(detail::padded("p", p));

  for (std::int64_t i = 0; i < cfg.n_items; ++i) {
    ItemRecord item;
    item.item_id = detail::padded("i", i);
    if (!rng.coin(cfg.missing("carbon_footprint")))
      item.carbon_footprint = rng.uniform(0.0, 10.0);
    if (!rng.coin(cfg.missing("is_green"))) item.is_green = rng.coin(0.5);
    if (!rng.coin(cfg.missing("is_harmful"))) item.is_harmful = rng.coin(0.2);
    if (!rng.coin(cfg.missing("lci_score"))) item.lci_score = rng.uniform(0.0, 5.0);
    if (!rng.coin(cfg.missing("producer_id")))
      item.producer_id = producers[rng.below(producers.size())];
    if (!rng.coin(cfg.missing("producer_region")))
      item.producer_region = regions[rng.below(regions.size())];
    if (!rng.coin(cfg.missing("sustainability_label")))
      item.sustainability_label = rng.coin(0.5);
    ds.catalog.push_back(std::move(item));
  }

  for (std::int64_t u = 0; u < cfg.n_users; ++u) {
    UserRecord user;
    user.user_id = detail::padded("u", u);
    user.group_ids.push_back(groups[rng.below(groups.size())]);
    if (cfg.n_groups > 1 && rng.coin(0.3)) {
      std::string extra = groups[rng.below(groups.size())];
      if (extra != user.group_ids[0]) user.group_ids.push_back(extra);
    }
    if (rng.coin(0.8)) user.region = regions[rng.below(regions.size())];
    std::int64_t n_fam = static_cast<std::int64_t>(rng.below(3));
    for (std::int64_t f = 0; f < n_fam; ++f)
      user.familiar_items.insert(ds.catalog[rng.below(ds.catalog.size())].item_id);
    ds.users.push_back(std::move(user));
  }

  std::int64_t list_max = cfg.list_max < cfg.n_items ? cfg.list_max : cfg.n_items;
  std::int64_t list_min = cfg.list_min < list_max ? cfg.list_min : list_max;
  for (const auto& user : ds.users) {
    std::int64_t len =
        list_min + static_cast<std::int64_t>(rng.below(
                       static_cast<std::uint64_t>(list_max - list_min + 1)));
    std::vector<std::string> picks;
    for (const auto& item : ds.catalog) picks.push_back(item.item_id);
    rng.shuffle(picks);
    for (std::int64_t r = 0; r < len; ++r) {
      RecRow row;
      row.user_id = user.user_id;
      row.rank = r + 1;
      row.item_id = picks[static_cast<std::size_t>(r)];
      ds.rec_rows.push_back(std::move(row));
      if (!rng.coin(cfg.missing("relevance"))) {
        RelevanceRow rel;
        rel.user_id = user.user_id;
        rel.item_id = picks[static_cast<std::size_t>(r)];
        rel.relevance = rng.uniform();
        ds.relevance_rows.push_back(std::move(rel));
      }
    }
    // A few judged items beyond the delivered list, for re-ranking pools.
    for (std::int64_t extra = 0; extra < 3 && len + extra < cfg.n_items; ++extra) {
      if (rng.coin(0.5)) continue;
      RelevanceRow rel;
      rel.user_id = user.user_id;
      rel.item_id = picks[static_cast<std::size_t>(len + extra)];
      rel.relevance = rng.uniform();
      ds.relevance_rows.push_back(std::move(rel));
    }
  }
  ds.has_relevance_table = true;

  if (cfg.with_similarity) {
    for (std::size_t a = 0; a < ds.catalog.size(); ++a) {
      for (std::size_t b = a + 1; b < ds.catalog.size(); ++b) {
        SimilarityRow row;
        row.item_a = ds.catalog[a].item_id;
        row.item_b = ds.catalog[b].item_id;
        row.sim = rng.uniform();
        ds.similarity_rows.push_back(std::move(row));
      }
    }
    ds.has_similarity_table = true;
  }

  if (cfg.with_energy) {
    EnergyLedger e;
    e.e_inference_kwh = rng.uniform(0.0, 100.0);
    e.n_rec = 1 + static_cast<std::int64_t>(rng.below(1000));
    e.ec_build_kwh = rng.uniform(0.0, 200.0);
    e.n_epoch = 1 + static_cast<std::int64_t>(rng.below(10));
    e.n_data_processed = 1 + static_cast<std::int64_t>(rng.below(1000));
    ds.energy = e;
  }

  if (cfg.with_paired) {
    PairedObservation energy;
    energy.kind = "energy";
    energy.baseline = rng.uniform(50.0, 150.0);
    energy.treatment = rng.uniform(30.0, 160.0);
    energy.unit = "kWh";
    ds.paired.push_back(energy);
    PairedObservation reuse;
    reuse.kind = "reuse_rate";
    reuse.baseline = rng.uniform();
    reuse.treatment = rng.uniform();
    reuse.unit = "ratio";
    ds.paired.push_back(reuse);
    PairedObservation health;
    health.kind = "health";
    health.baseline = rng.uniform(50.0, 150.0);
    health.treatment = rng.uniform(50.0, 150.0);
    health.unit = "score";
    ds.paired.push_back(health);
    ds.has_paired_table = true;
  }

  if (cfg.with_accessibility) {
    for (std::int64_t q = 0; q < cfg.n_artifacts; ++q) {
      for (const auto& g : groups) {
        AccessibilityRow row;
        row.artifact_id = detail::padded("q", q);
        row.group = g;
        row.score = rng.uniform();
        ds.accessibility_rows.push_back(std::move(row));
      }
    }
    ds.has_accessibility_table = true;
  }

  if (cfg.with_satisfaction) {
    for (const auto& user : ds.users) {
      if (rng.coin(0.1)) continue;
      for (std::int64_t t = 1; t <= cfg.horizon; ++t) {
        SatisfactionRow row;
        row.user_id = user.user_id;
        row.t = t;
        row.value = rng.uniform();
        ds.satisfaction_rows.push_back(std::move(row));
      }
    }
    ds.has_satisfaction_table = true;
  }

  if (cfg.with_behaviors) {
    for (const auto& user : ds.users) {
      for (std::int64_t b = 0; b < cfg.behaviors_per_user; ++b) {
        BehaviorEvent ev;
        ev.user_id = user.user_id;
        ev.behavior_kind = rng.coin(cfg.sustainable_fraction) ? "eco_action" : "browse";
        if (rng.coin(0.5)) ev.item_id = ds.catalog[rng.below(ds.catalog.size())].item_id;
        ds.behaviors.push_back(std::move(ev));
      }
    }
    ds.sustainable_kinds.insert("eco_action");
    ds.has_behaviors_table = true;
  }

  if (cfg.with_explanations) {
    for (const auto& user : ds.users) {
      if (rng.coin(0.2)) continue;
      for (std::int64_t e = 0; e < cfg.explanations_per_user; ++e) {
        ExplanationRecord ex;
        ex.user_id = user.user_id;
        ex.explanation_id = detail::padded("e", e);
        ex.interpret_score = rng.uniform();
        ds.explanations.push_back(std::move(ex));
      }
    }
    ds.has_explanations_table = true;
  }

  ds.group_universe = groups;
  ds.epsilon = 0.05;
  ds.finalize();
  return ds;
}

}  // namespace sustainrec
