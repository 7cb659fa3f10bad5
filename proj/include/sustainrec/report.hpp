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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "sustainrec/crosscut_metrics.hpp"
#include "sustainrec/csv.hpp"
#include "sustainrec/econ_metrics.hpp"
#include "sustainrec/env_metrics.hpp"
#include "sustainrec/ingest.hpp"
#include "sustainrec/rerank.hpp"
#include "sustainrec/social_metrics.hpp"
#include "sustainrec/types.hpp"
#include "sustainrec/version.hpp"

namespace sustainrec {

// Reported numbers are fixed to 12 significant digits so reruns emit the
// same bytes regardless of how the value was accumulated.
inline std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format12(v).c_str(), nullptr);
}

// Runs fn(0..n-1) across at most `threads` workers. Results must land in
// per-index slots; assembly stays with the caller, in index order.
inline void run_parallel(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::size_t n_workers = static_cast<std::size_t>(threads) < n
                              ? static_cast<std::size_t>(threads)
                              : n;
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---- metric dispatch ---------------------------------------------------------

inline std::vector<std::string> default_metric_names() {
  std::vector<std::string> names;
  for (const auto& m : metric_registry()) names.push_back(m.name);
  return names;
}

inline MetricReport label_coverage_report(const Dataset& ds) {
  MetricReport r;
  r.metric_name = "labelcoverage";
  MetricValue primary = label_coverage(ds.catalog, "sustainability_label");
  if (!primary.defined()) {
    r.undefined_reason = primary.reason;
    return r;
  }
  r.value = *primary.value;
  for (const auto& [field, v] : coverage_table(ds.catalog))
    if (v.defined()) r.details[field] = *v.value;
  return r;
}

inline MetricReport compute_metric(const Dataset& ds, const EvalConfig& cfg,
                                   const std::string& name) {
  if (name == "avgcarfi") return avg_carbon_footprint(ds);
  if (name == "girec") return green_item_rate(ds);
  if (name == "ecrec") return energy_per_recommendation_report(ds);
  if (name == "ectrain") return energy_per_epoch_report(ds);
  if (name == "ecpdat") return energy_per_data_unit_report(ds);
  if (name == "estrec") return energy_savings_report(ds);
  if (name == "rtr") return reuse_gain_report(ds);
  if (name == "parity") return demographic_parity_report(ds, effective_epsilon(ds, cfg));
  if (name == "listd") return intra_list_diversity_report(ds);
  if (name == "ser") return serendipity_report(ds);
  if (name == "acc") return accessibility_report(ds);
  if (name == "inclusivity") return inclusivity_report(ds, effective_epsilon(ds, cfg));
  if (name == "hier") return harmful_exposure_rate(ds);
  if (name == "hirec") return health_improvement_report(ds);
  if (name == "lbpr") return local_business_rate(ds);
  if (name == "loyalty") return loyalty_report(ds, effective_decay(ds, cfg));
  if (name == "avgloyalty") return avg_loyalty(ds, effective_decay(ds, cfg));
  if (name == "pef") return producer_exposure_fairness(ds, cfg.pef_category);
  if (name == "sbs") return sustainable_behavior_score(ds);
  if (name == "intp") return avg_interpretability(ds);
  if (name == "avglci") return avg_life_cycle_impact(ds);
  if (name == "labelcoverage") return label_coverage_report(ds);
  throw std::invalid_argument("unknown-metric '" + name + "'");
}

inline std::vector<MetricReport> evaluate(const Dataset& ds, const EvalConfig& cfg,
                                          const std::vector<std::string>& names) {
  std::vector<MetricReport> out(names.size());
  run_parallel(names.size(), cfg.threads,
               [&](std::size_t i) { out[i] = compute_metric(ds, cfg, names[i]); });
  return out;
}

// ---- evaluate rendering --------------------------------------------------------

namespace detail {

inline nlohmann::json map_json(const std::map<std::string, double>& m) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [k, v] : m) obj[k] = round12(v);
  return obj;
}

}  // namespace detail

inline nlohmann::json metric_json(const MetricReport& r) {
  nlohmann::json obj;
  if (r.defined()) {
    obj["status"] = "ok";
    obj["value"] = round12(*r.value);
  } else {
    obj["status"] = "undefined";
    obj["reason"] = r.undefined_reason;
  }
  if (r.coverage) obj["coverage"] = round12(*r.coverage);
  if (!r.per_user.empty()) obj["per_user"] = detail::map_json(r.per_user);
  if (!r.per_group.empty()) obj["per_group"] = detail::map_json(r.per_group);
  if (!r.per_item.empty()) obj["per_item"] = detail::map_json(r.per_item);
  if (!r.per_producer.empty()) obj["per_producer"] = detail::map_json(r.per_producer);
  if (!r.details.empty()) obj["details"] = detail::map_json(r.details);
  if (!r.notes.empty()) obj["notes"] = r.notes;
  return obj;
}

inline nlohmann::json evaluate_json(const Dataset& ds, const std::vector<MetricReport>& reports) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  doc["units"] = {{"energy", ds.units.energy},
                  {"carbon", ds.units.carbon},
                  {"data", ds.units.data}};
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& r : reports) metrics[r.metric_name] = metric_json(r);
  doc["metrics"] = metrics;
  return doc;
}

inline std::string evaluate_csv(const std::vector<MetricReport>& reports) {
  std::string out = csv::format_row({"metric", "field", "entity", "value"});
  std::vector<const MetricReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const MetricReport* a, const MetricReport* b) {
    return a->metric_name < b->metric_name;
  });
  for (const MetricReport* r : sorted) {
    const std::string& name = r->metric_name;
    out += csv::format_row({name, "status", "", r->defined() ? "ok" : "undefined"});
    if (r->defined())
      out += csv::format_row({name, "value", "", format12(*r->value)});
    else
      out += csv::format_row({name, "reason", "", r->undefined_reason});
    if (r->coverage) out += csv::format_row({name, "coverage", "", format12(*r->coverage)});
    auto emit_map = [&](const char* field, const std::map<std::string, double>& m) {
      for (const auto& [k, v] : m) out += csv::format_row({name, field, k, format12(v)});
    };
    emit_map("per_user", r->per_user);
    emit_map("per_group", r->per_group);
    emit_map("per_item", r->per_item);
    emit_map("per_producer", r->per_producer);
    emit_map("detail", r->details);
    for (const auto& n : r->notes) out += csv::format_row({name, "note", "", n});
  }
  return out;
}

// ---- coverage rendering --------------------------------------------------------

// Metrics that read the given catalog field, from the registry.
inline std::vector<std::string> metrics_fed_by(const std::string& field) {
  std::vector<std::string> fed;
  std::string token = "catalog." + field;
  for (const auto& m : metric_registry()) {
    std::string inputs = m.inputs;
    std::size_t pos = inputs.find(token);
    if (pos == std::string::npos) continue;
    std::size_t end = pos + token.size();
    if (end < inputs.size() && inputs[end] != ',') continue;  // prefix of a longer token
    fed.push_back(m.name);
  }
  return fed;
}

inline nlohmann::json coverage_json(const Dataset& ds) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  nlohmann::json fields = nlohmann::json::object();
  for (const auto& [field, v] : coverage_table(ds.catalog)) {
    nlohmann::json entry;
    if (v.defined()) {
      entry["status"] = "ok";
      entry["value"] = round12(*v.value);
    } else {
      entry["status"] = "undefined";
      entry["reason"] = v.reason;
    }
    entry["feeds"] = metrics_fed_by(field);
    fields[field] = entry;
  }
  doc["fields"] = fields;
  return doc;
}

inline std::string coverage_csv(const Dataset& ds) {
  std::string out = csv::format_row({"field", "value", "feeds"});
  for (const auto& [field, v] : coverage_table(ds.catalog))
    out += csv::format_row({field, v.defined() ? format12(*v.value) : v.reason,
                            join_list(metrics_fed_by(field))});
  return out;
}

// ---- rerank rendering ----------------------------------------------------------

struct UserFrontier {
  std::string user_id;
  std::vector<FrontierPoint> points;
  std::string skipped_reason;  // nonempty when the user was not rankable
};

inline nlohmann::json rerank_json(const std::vector<UserFrontier>& frontiers, std::size_t k,
                                  const std::string& objective, std::size_t grid_size) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  doc["k"] = k;
  doc["objective"] = objective;
  doc["grid_size"] = grid_size;
  nlohmann::json users = nlohmann::json::object();
  for (const auto& f : frontiers) {
    if (!f.skipped_reason.empty()) {
      users[f.user_id] = {{"skipped", f.skipped_reason}};
      continue;
    }
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : f.points) {
      nlohmann::json p;
      p["weight"] = round12(pt.weight);
      p["accuracy"] = round12(pt.accuracy);
      p["sustainability"] = round12(pt.sustainability);
      p["items"] = pt.list;
      points.push_back(p);
    }
    users[f.user_id] = {{"frontier", points}};
  }
  doc["users"] = users;
  return doc;
}

inline std::string rerank_csv(const std::vector<UserFrontier>& frontiers) {
  std::string out =
      csv::format_row({"user_id", "weight", "accuracy", "sustainability", "items"});
  for (const auto& f : frontiers) {
    if (!f.skipped_reason.empty()) {
      out += csv::format_row({f.user_id, "", "", "", "skipped: " + f.skipped_reason});
      continue;
    }
    for (const auto& pt : f.points)
      out += csv::format_row({f.user_id, format12(pt.weight), format12(pt.accuracy),
                              format12(pt.sustainability), join_list(pt.list)});
  }
  return out;
}

struct UserGreenList {
  std::string user_id;
  GreenFilterResult result;
  std::string skipped_reason;
};

inline nlohmann::json green_filter_json(const std::vector<UserGreenList>& lists,
                                        std::size_t k) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  doc["k"] = k;
  doc["mode"] = "green-filter";
  nlohmann::json users = nlohmann::json::object();
  for (const auto& l : lists) {
    if (!l.skipped_reason.empty()) {
      users[l.user_id] = {{"skipped", l.skipped_reason}};
      continue;
    }
    users[l.user_id] = {{"items", l.result.list},
                        {"non_green_used", l.result.non_green_used}};
  }
  doc["users"] = users;
  return doc;
}

inline std::string green_filter_csv(const std::vector<UserGreenList>& lists) {
  std::string out = csv::format_row({"user_id", "items", "non_green_used"});
  for (const auto& l : lists) {
    if (!l.skipped_reason.empty()) {
      out += csv::format_row({l.user_id, "skipped: " + l.skipped_reason, ""});
      continue;
    }
    out += csv::format_row(
        {l.user_id, join_list(l.result.list), std::to_string(l.result.non_green_used)});
  }
  return out;
}

}  // namespace sustainrec
