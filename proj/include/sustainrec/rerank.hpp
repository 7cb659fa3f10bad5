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
#include <stdexcept>
#include <string>
#include <vector>

#include "sustainrec/types.hpp"

namespace sustainrec {

enum class SustainabilityObjective { kGreenRate, kCarbon, kLci };

inline SustainabilityObjective parse_objective(const std::string& name) {
  if (name == "green") return SustainabilityObjective::kGreenRate;
  if (name == "carbon") return SustainabilityObjective::kCarbon;
  if (name == "lci") return SustainabilityObjective::kLci;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

struct Candidate {
  std::string item_id;
  double relevance = 0.0;
  bool green = false;    // unknown flags count as not green
  double carbon = 0.0;   // unknown values carry the pool maximum
  double lci = 0.0;
};

/*
 * One user's re-ranking instance: the judged candidate pool, the output
 * length and the sustainability objective, with pool statistics fixed up
 * front so every list scores in [0,1] on both axes.
 */
struct RerankProblem {
  std::string user_id;
  std::vector<Candidate> pool;  // sorted by item_id
  std::size_t k = 0;
  SustainabilityObjective objective = SustainabilityObjective::kGreenRate;
  double idcg = 0.0;
  double max_carbon = 0.0;
  double max_lci = 0.0;
};

struct FrontierPoint {
  double weight = 0.0;  // smallest grid weight producing the list
  std::vector<std::string> list;
  double accuracy = 0.0;
  double sustainability = 0.0;
};

inline double rank_discount(std::size_t rank) {
  return 1.0 / std::log2(static_cast<double>(rank) + 1.0);
}

// Gain-over-log-discount NDCG. The normalizer is the ideal ordering of
// the pool gains, so a list in ideal order scores 1.
inline double ndcg_at_k(const std::vector<double>& list_gains, std::vector<double> pool_gains,
                        std::size_t k) {
  double dcg = 0.0;
  for (std::size_t r = 0; r < list_gains.size() && r < k; ++r)
    dcg += list_gains[r] * rank_discount(r + 1);
  std::sort(pool_gains.begin(), pool_gains.end(), std::greater<double>());
  double idcg = 0.0;
  for (std::size_t r = 0; r < pool_gains.size() && r < k; ++r)
    idcg += pool_gains[r] * rank_discount(r + 1);
  if (idcg == 0.0) return 0.0;
  return dcg / idcg;
}

namespace detail {

inline double ideal_dcg(const RerankProblem& p) {
  std::vector<double> gains;
  gains.reserve(p.pool.size());
  for (const auto& c : p.pool) gains.push_back(c.relevance);
  std::sort(gains.begin(), gains.end(), std::greater<double>());
  double idcg = 0.0;
  for (std::size_t r = 0; r < gains.size() && r < p.k; ++r)
    idcg += gains[r] * rank_discount(r + 1);
  return idcg;
}

// Per-item sustainability contribution in [0,1].
inline double item_gain(const RerankProblem& p, const Candidate& c) {
  switch (p.objective) {
    case SustainabilityObjective::kGreenRate:
      return c.green ? 1.0 : 0.0;
    case SustainabilityObjective::kCarbon:
      return p.max_carbon == 0.0 ? 1.0 : 1.0 - c.carbon / p.max_carbon;
    case SustainabilityObjective::kLci:
      return p.max_lci == 0.0 ? 1.0 : 1.0 - c.lci / p.max_lci;
  }
  return 0.0;
}

}  // namespace detail

// Prepares derived pool statistics; call after filling pool and k.
inline void finalize_problem(RerankProblem& p) {
  std::sort(p.pool.begin(), p.pool.end(),
            [](const Candidate& a, const Candidate& b) { return a.item_id < b.item_id; });
  p.max_carbon = 0.0;
  p.max_lci = 0.0;
  for (const auto& c : p.pool) {
    if (c.carbon > p.max_carbon) p.max_carbon = c.carbon;
    if (c.lci > p.max_lci) p.max_lci = c.lci;
  }
  p.idcg = detail::ideal_dcg(p);
}

inline double accuracy_of(const RerankProblem& p, const std::vector<const Candidate*>& list) {
  if (p.idcg == 0.0) return 0.0;
  double dcg = 0.0;
  for (std::size_t r = 0; r < list.size(); ++r)
    dcg += list[r]->relevance * rank_discount(r + 1);
  return dcg / p.idcg;
}

inline double sustainability_of(const RerankProblem& p,
                                const std::vector<const Candidate*>& list) {
  if (list.empty()) return 0.0;
  double sum = 0.0;
  for (const Candidate* c : list) sum += detail::item_gain(p, *c);
  return sum / static_cast<double>(list.size());
}

namespace detail {

inline const Candidate* find_candidate(const RerankProblem& p, const std::string& id) {
  for (const auto& c : p.pool)
    if (c.item_id == id) return &c;
  return nullptr;
}

inline std::vector<const Candidate*> resolve(const RerankProblem& p,
                                             const std::vector<std::string>& ids) {
  std::vector<const Candidate*> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    const Candidate* c = find_candidate(p, id);
    if (c) out.push_back(c);
  }
  return out;
}

// Deterministic NDCG-optimal order of a selection.
inline void order_for_accuracy(std::vector<const Candidate*>& sel) {
  std::sort(sel.begin(), sel.end(), [](const Candidate* a, const Candidate* b) {
    if (a->relevance != b->relevance) return a->relevance > b->relevance;
    return a->item_id < b->item_id;
  });
}

}  // namespace detail

inline std::pair<double, double> score_list(const RerankProblem& p,
                                            const std::vector<std::string>& ids) {
  auto list = detail::resolve(p, ids);
  return {accuracy_of(p, list), sustainability_of(p, list)};
}

/*
 * Greedy scalarized construction: each step appends the candidate with
 * the largest weighted marginal gain, weight on accuracy and 1-weight on
 * sustainability. Ties go to the lower item id.
 */
inline std::vector<std::string> scalarized_rerank(const RerankProblem& p, double weight) {
  if (p.k > p.pool.size()) throw std::invalid_argument("pool-smaller-than-k");
  if (weight < 0.0 || weight > 1.0) throw std::invalid_argument("weight outside [0,1]");
  std::vector<bool> used(p.pool.size(), false);
  std::vector<std::string> out;
  const double kd = static_cast<double>(p.k);
  for (std::size_t step = 0; step < p.k; ++step) {
    std::size_t best = p.pool.size();
    double best_gain = 0.0;
    double disc = rank_discount(step + 1);
    for (std::size_t i = 0; i < p.pool.size(); ++i) {
      if (used[i]) continue;
      const Candidate& c = p.pool[i];
      double acc_gain = p.idcg == 0.0 ? 0.0 : c.relevance * disc / p.idcg;
      double sus_gain = detail::item_gain(p, c) / kd;
      double gain = weight * acc_gain + (1.0 - weight) * sus_gain;
      if (best == p.pool.size() || gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    used[best] = true;
    out.push_back(p.pool[best].item_id);
  }
  return out;
}

/*
 * Greedy lists across the weight grid, each selection re-ordered for
 * accuracy before scoring, dominated vectors removed and identical lists
 * merged. Sorted by ascending accuracy.
 */
inline std::vector<FrontierPoint> pareto_frontier(const RerankProblem& p,
                                                  const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty weight grid");
  std::map<std::vector<std::string>, FrontierPoint> by_list;
  for (double w : grid) {
    std::vector<std::string> ids = scalarized_rerank(p, w);
    auto sel = detail::resolve(p, ids);
    detail::order_for_accuracy(sel);
    std::vector<std::string> ordered;
    ordered.reserve(sel.size());
    for (const Candidate* c : sel) ordered.push_back(c->item_id);
    auto it = by_list.find(ordered);
    if (it != by_list.end()) {
      if (w < it->second.weight) it->second.weight = w;
      continue;
    }
    FrontierPoint pt;
    pt.weight = w;
    pt.list = ordered;
    pt.accuracy = accuracy_of(p, sel);
    pt.sustainability = sustainability_of(p, sel);
    by_list.emplace(std::move(ordered), std::move(pt));
  }

  std::vector<FrontierPoint> points;
  for (auto& [ids, pt] : by_list) points.push_back(pt);
  std::vector<FrontierPoint> kept;
  for (const auto& a : points) {
    bool dominated = false;
    for (const auto& b : points) {
      if (b.accuracy >= a.accuracy && b.sustainability >= a.sustainability &&
          (b.accuracy > a.accuracy || b.sustainability > a.sustainability)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
    if (a.accuracy != b.accuracy) return a.accuracy < b.accuracy;
    if (a.sustainability != b.sustainability) return a.sustainability < b.sustainability;
    return a.list < b.list;
  });
  return kept;
}

inline std::vector<double> uniform_grid(std::size_t n) {
  std::vector<double> grid;
  if (n == 1) {
    grid.push_back(0.5);
    return grid;
  }
  for (std::size_t i = 0; i < n; ++i)
    grid.push_back(static_cast<double>(i) / static_cast<double>(n - 1));
  return grid;
}

struct GreenFilterResult {
  std::vector<std::string> list;
  std::int64_t non_green_used = 0;
};

// Relevance ranking restricted to green candidates, topped up with the
// best non-green items when greens run out.
inline GreenFilterResult green_filter_rerank(const RerankProblem& p) {
  auto by_rel = [](const Candidate* a, const Candidate* b) {
    if (a->relevance != b->relevance) return a->relevance > b->relevance;
    return a->item_id < b->item_id;
  };
  std::vector<const Candidate*> greens;
  std::vector<const Candidate*> rest;
  for (const auto& c : p.pool) (c.green ? greens : rest).push_back(&c);
  std::sort(greens.begin(), greens.end(), by_rel);
  std::sort(rest.begin(), rest.end(), by_rel);
  GreenFilterResult out;
  for (const Candidate* c : greens) {
    if (out.list.size() == p.k) break;
    out.list.push_back(c->item_id);
  }
  for (const Candidate* c : rest) {
    if (out.list.size() == p.k) break;
    out.list.push_back(c->item_id);
    ++out.non_green_used;
  }
  return out;
}

// One problem per user holding relevance judgments, pool = judged items.
inline std::vector<RerankProblem> build_problems(const Dataset& ds, std::size_t k,
                                                 SustainabilityObjective objective) {
  std::map<std::string, std::vector<Candidate>> pools;
  for (const auto& [key, rel] : ds.relevance) {
    Candidate c;
    c.item_id = key.second;
    c.relevance = rel;
    pools[key.first].push_back(std::move(c));
  }
  std::vector<RerankProblem> problems;
  for (auto& [user_id, pool] : pools) {
    RerankProblem p;
    p.user_id = user_id;
    p.pool = std::move(pool);
    p.k = k;
    p.objective = objective;
    double max_known_carbon = 0.0;
    double max_known_lci = 0.0;
    std::vector<bool> carbon_known(p.pool.size(), false);
    std::vector<bool> lci_known(p.pool.size(), false);
    for (std::size_t i = 0; i < p.pool.size(); ++i) {
      const ItemRecord* item = ds.item(p.pool[i].item_id);
      if (!item) continue;
      if (item->is_green) p.pool[i].green = *item->is_green;
      if (item->carbon_footprint) {
        p.pool[i].carbon = *item->carbon_footprint;
        carbon_known[i] = true;
        if (*item->carbon_footprint > max_known_carbon)
          max_known_carbon = *item->carbon_footprint;
      }
      if (item->lci_score) {
        p.pool[i].lci = *item->lci_score;
        lci_known[i] = true;
        if (*item->lci_score > max_known_lci) max_known_lci = *item->lci_score;
      }
    }
    for (std::size_t i = 0; i < p.pool.size(); ++i) {
      if (!carbon_known[i]) p.pool[i].carbon = max_known_carbon;
      if (!lci_known[i]) p.pool[i].lci = max_known_lci;
    }
    finalize_problem(p);
    problems.push_back(std::move(p));
  }
  return problems;
}

}  // namespace sustainrec
