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

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sustainrec/csv.hpp"
#include "sustainrec/manifest.hpp"
#include "sustainrec/types.hpp"
#include "sustainrec/validate.hpp"

namespace sustainrec {

/// Dataset refused because validation found hard violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error("dataset has " + std::to_string(report.hard_count()) +
                           " hard violation(s):\n" + report.summary()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// ---- label coverage ---------------------------------------------------------

inline const std::vector<std::string>& sustainability_fields() {
  static const std::vector<std::string> kFields = {
      "carbon_footprint", "is_green",        "is_harmful",           "lci_score",
      "producer_id",      "producer_region", "sustainability_label"};
  return kFields;
}

// Share of catalog items whose given attribute is known.
inline MetricValue label_coverage(const std::vector<ItemRecord>& catalog,
                                  const std::string& field) {
  if (catalog.empty()) return MetricValue::undefined("empty-catalog");
  auto known = [&](const ItemRecord& it) -> std::optional<bool> {
    if (field == "carbon_footprint") return it.carbon_footprint.has_value();
    if (field == "is_green") return it.is_green.has_value();
    if (field == "is_harmful") return it.is_harmful.has_value();
    if (field == "lci_score") return it.lci_score.has_value();
    if (field == "producer_id") return it.producer_id.has_value();
    if (field == "producer_region") return it.producer_region.has_value();
    if (field == "sustainability_label") return it.sustainability_label.has_value();
    return std::nullopt;
  };
  if (!known(catalog.front()).has_value()) return MetricValue::undefined("unknown-field");
  std::size_t labeled = 0;
  for (const auto& it : catalog) labeled += *known(it) ? 1 : 0;
  return MetricValue::ok(static_cast<double>(labeled) / static_cast<double>(catalog.size()));
}

inline std::map<std::string, MetricValue> coverage_table(const std::vector<ItemRecord>& catalog) {
  std::map<std::string, MetricValue> out;
  for (const auto& f : sustainability_fields()) out[f] = label_coverage(catalog, f);
  return out;
}

// ---- table loaders ----------------------------------------------------------

namespace detail {

inline std::string require_key_cell(const csv::Table& t, const csv::Row& row, std::size_t col,
                                    const std::string& what) {
  const std::string& cell = t.cell(row, col);
  if (cell.empty()) throw SchemaError(t.path, row.line, "missing " + what);
  return cell;
}

inline double require_double_cell(const csv::Table& t, const csv::Row& row, std::size_t col,
                                  const std::string& what) {
  auto v = parse_double_cell(t, row, col);
  if (!v) throw SchemaError(t.path, row.line, "missing " + what);
  return *v;
}

inline std::int64_t require_int_cell(const csv::Table& t, const csv::Row& row, std::size_t col,
                                     const std::string& what) {
  auto v = parse_int_cell(t, row, col);
  if (!v) throw SchemaError(t.path, row.line, "missing " + what);
  return *v;
}

inline std::optional<double> nonnegative_cell(const csv::Table& t, const csv::Row& row,
                                              std::size_t col, const std::string& what) {
  auto v = parse_double_cell(t, row, col);
  if (v && *v < 0) throw SchemaError(t.path, row.line, what + " must be >= 0");
  return v;
}

inline void load_catalog(const csv::Table& t, const DatasetManifest& m, Dataset& ds) {
  std::size_t c_id = t.column("item_id");
  auto col_of = [&](const std::string& name) -> std::optional<std::size_t> {
    if (name.empty() || !t.has_column(name)) return std::nullopt;
    return t.column(name);
  };
  auto c_carf = col_of("carbon_footprint");
  auto c_green = col_of(m.green_column);
  auto c_harm = col_of(m.harmful_column);
  auto c_lci = col_of("lci_score");
  auto c_prod = col_of("producer_id");
  auto c_preg = col_of("producer_region");
  auto c_label = col_of(m.label_column);
  auto c_local = col_of(m.is_local_column);
  auto c_cat = col_of(m.category_column);
  if (!m.is_local_column.empty() && !c_local)
    throw SchemaError(t.path, 1, "bound column '" + m.is_local_column + "' not in catalog");
  if (!m.category_column.empty() && !c_cat)
    throw SchemaError(t.path, 1, "bound column '" + m.category_column + "' not in catalog");
  ds.has_is_local_column = c_local.has_value();
  ds.has_category_column = c_cat.has_value();

  for (const auto& row : t.rows) {
    ItemRecord item;
    item.item_id = require_key_cell(t, row, c_id, "item_id");
    if (c_carf) item.carbon_footprint = nonnegative_cell(t, row, *c_carf, "carbon_footprint");
    if (c_green) item.is_green = parse_bool_cell(t, row, *c_green);
    if (c_harm) item.is_harmful = parse_bool_cell(t, row, *c_harm);
    if (c_lci) item.lci_score = nonnegative_cell(t, row, *c_lci, "lci_score");
    if (c_prod) item.producer_id = parse_string_cell(t, row, *c_prod);
    if (c_preg) item.producer_region = parse_string_cell(t, row, *c_preg);
    if (c_label) item.sustainability_label = parse_bool_cell(t, row, *c_label);
    if (c_local) item.is_local = parse_bool_cell(t, row, *c_local);
    if (c_cat) item.category = parse_string_cell(t, row, *c_cat);
    ds.catalog.push_back(std::move(item));
  }
}

inline void load_users(const csv::Table& t, Dataset& ds) {
  std::size_t c_id = t.column("user_id");
  auto has_groups = t.has_column("groups");
  auto has_region = t.has_column("region");
  auto has_fam = t.has_column("familiar_items");
  for (const auto& row : t.rows) {
    UserRecord u;
    u.user_id = require_key_cell(t, row, c_id, "user_id");
    if (has_groups) u.group_ids = split_list(t.cell(row, t.column("groups")));
    if (has_region) u.region = parse_string_cell(t, row, t.column("region"));
    if (has_fam) {
      for (auto& f : split_list(t.cell(row, t.column("familiar_items"))))
        u.familiar_items.insert(std::move(f));
    }
    ds.users.push_back(std::move(u));
  }
}

inline void load_recommendations(const csv::Table& t, Dataset& ds) {
  std::size_t c_user = t.column("user_id");
  std::size_t c_rank = t.column("rank");
  std::size_t c_item = t.column("item_id");
  bool has_ts = t.has_column("timestamp");
  for (const auto& row : t.rows) {
    RecRow r;
    r.user_id = require_key_cell(t, row, c_user, "user_id");
    r.rank = require_int_cell(t, row, c_rank, "rank");
    r.item_id = require_key_cell(t, row, c_item, "item_id");
    if (has_ts) r.timestamp = parse_string_cell(t, row, t.column("timestamp"));
    ds.rec_rows.push_back(std::move(r));
  }
}

inline void load_relevance(const csv::Table& t, Dataset& ds) {
  std::size_t c_user = t.column("user_id");
  std::size_t c_item = t.column("item_id");
  std::size_t c_rel = t.column("relevance");
  for (const auto& row : t.rows) {
    RelevanceRow r;
    r.user_id = require_key_cell(t, row, c_user, "user_id");
    r.item_id = require_key_cell(t, row, c_item, "item_id");
    r.relevance = require_double_cell(t, row, c_rel, "relevance");
    ds.relevance_rows.push_back(std::move(r));
  }
  ds.has_relevance_table = true;
}

inline void load_similarity(const csv::Table& t, Dataset& ds) {
  std::size_t c_a = t.column("item_a");
  std::size_t c_b = t.column("item_b");
  std::size_t c_sim = t.column("sim");
  for (const auto& row : t.rows) {
    SimilarityRow s;
    s.item_a = require_key_cell(t, row, c_a, "item_a");
    s.item_b = require_key_cell(t, row, c_b, "item_b");
    s.sim = require_double_cell(t, row, c_sim, "sim");
    ds.similarity_rows.push_back(std::move(s));
  }
  ds.has_similarity_table = true;
}

inline void load_item_features(const csv::Table& t, Dataset& ds) {
  std::size_t c_id = t.column("item_id");
  if (t.header.size() < 2) throw SchemaError(t.path, 1, "item_features needs feature columns");
  for (const auto& row : t.rows) {
    std::string id = require_key_cell(t, row, c_id, "item_id");
    std::vector<double> feats;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      if (c == c_id) continue;
      feats.push_back(require_double_cell(t, row, c, "feature " + t.header[c]));
    }
    ds.item_features[id] = std::move(feats);
  }
  ds.has_item_features = true;
}

inline void load_energy(const csv::Table& t, Dataset& ds) {
  if (t.rows.size() != 1)
    throw SchemaError(t.path, 1, "energy table needs exactly one data row");
  const auto& row = t.rows.front();
  EnergyLedger e;
  e.e_inference_kwh = require_double_cell(t, row, t.column("e_inference_kwh"), "e_inference_kwh");
  e.n_rec = require_int_cell(t, row, t.column("n_rec"), "n_rec");
  e.ec_build_kwh = require_double_cell(t, row, t.column("ec_build_kwh"), "ec_build_kwh");
  e.n_epoch = require_int_cell(t, row, t.column("n_epoch"), "n_epoch");
  e.n_data_processed =
      require_int_cell(t, row, t.column("n_data_processed"), "n_data_processed");
  ds.energy = e;
}

inline void load_paired(const csv::Table& t, const DatasetManifest& m, Dataset& ds) {
  std::size_t c_kind = t.column("kind");
  std::size_t c_base = t.column("baseline");
  std::size_t c_treat = t.column("treatment");
  bool has_unit = t.has_column("unit");
  for (const auto& row : t.rows) {
    PairedObservation p;
    p.kind = require_key_cell(t, row, c_kind, "kind");
    p.baseline = require_double_cell(t, row, c_base, "baseline");
    p.treatment = require_double_cell(t, row, c_treat, "treatment");
    if (has_unit) p.unit = t.cell(row, t.column("unit"));
    auto hib = m.paired_higher_is_better.find(p.kind);
    p.higher_is_better = hib == m.paired_higher_is_better.end() ? true : hib->second;
    ds.paired.push_back(std::move(p));
  }
  ds.has_paired_table = true;
}

inline void load_accessibility(const csv::Table& t, Dataset& ds) {
  std::size_t c_art = t.column("artifact_id");
  std::size_t c_group = t.column("group");
  std::size_t c_score = t.column("score");
  for (const auto& row : t.rows) {
    AccessibilityRow a;
    a.artifact_id = require_key_cell(t, row, c_art, "artifact_id");
    a.group = require_key_cell(t, row, c_group, "group");
    a.score = require_double_cell(t, row, c_score, "score");
    ds.accessibility_rows.push_back(std::move(a));
  }
  ds.has_accessibility_table = true;
}

inline void load_satisfaction(const csv::Table& t, const DatasetManifest& m, Dataset& ds) {
  std::size_t c_user = t.column("user_id");
  std::size_t c_t = t.column("t");
  std::size_t c_val = t.column("value");
  double span = m.satisfaction_max - m.satisfaction_min;
  for (const auto& row : t.rows) {
    SatisfactionRow s;
    s.user_id = require_key_cell(t, row, c_user, "user_id");
    s.t = require_int_cell(t, row, c_t, "t");
    s.value = (require_double_cell(t, row, c_val, "value") - m.satisfaction_min) / span;
    ds.satisfaction_rows.push_back(std::move(s));
  }
  ds.has_satisfaction_table = true;
}

inline void load_behaviors(const std::string& path, Dataset& ds) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t') blank = false;
    if (blank) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(path, lineno, e.what());
    }
    if (!obj.is_object() || !obj.contains("user") || !obj["user"].is_string() ||
        !obj.contains("kind") || !obj["kind"].is_string())
      throw SchemaError(path, lineno, "event needs string fields 'user' and 'kind'");
    BehaviorEvent ev;
    ev.user_id = obj["user"].get<std::string>();
    ev.behavior_kind = obj["kind"].get<std::string>();
    if (obj.contains("item") && obj["item"].is_string())
      ev.item_id = obj["item"].get<std::string>();
    if (obj.contains("ts") && obj["ts"].is_string()) ev.timestamp = obj["ts"].get<std::string>();
    ds.behaviors.push_back(std::move(ev));
  }
  ds.has_behaviors_table = true;
}

inline void load_explanations(const csv::Table& t, Dataset& ds) {
  std::size_t c_user = t.column("user_id");
  std::size_t c_id = t.column("explanation_id");
  std::size_t c_score = t.column("score");
  for (const auto& row : t.rows) {
    ExplanationRecord ex;
    ex.user_id = require_key_cell(t, row, c_user, "user_id");
    ex.explanation_id = require_key_cell(t, row, c_id, "explanation_id");
    ex.interpret_score = require_double_cell(t, row, c_score, "score");
    ds.explanations.push_back(std::move(ex));
  }
  ds.has_explanations_table = true;
}

}  // namespace detail

// Builds the immutable snapshot. Throws IoError/SchemaError on unreadable
// or malformed input and ValidationError when hard violations remain.
inline Dataset load_dataset(const DatasetManifest& m) {
  Dataset ds;
  detail::load_catalog(csv::read_file(m.path_of("catalog")), m, ds);
  if (m.has_table("users")) detail::load_users(csv::read_file(m.path_of("users")), ds);
  if (m.has_table("recommendations"))
    detail::load_recommendations(csv::read_file(m.path_of("recommendations")), ds);
  if (m.has_table("relevance"))
    detail::load_relevance(csv::read_file(m.path_of("relevance")), ds);
  if (m.has_table("similarity"))
    detail::load_similarity(csv::read_file(m.path_of("similarity")), ds);
  if (m.has_table("item_features"))
    detail::load_item_features(csv::read_file(m.path_of("item_features")), ds);
  if (m.has_table("energy")) detail::load_energy(csv::read_file(m.path_of("energy")), ds);
  if (m.has_table("paired")) detail::load_paired(csv::read_file(m.path_of("paired")), m, ds);
  if (m.has_table("accessibility"))
    detail::load_accessibility(csv::read_file(m.path_of("accessibility")), ds);
  if (m.has_table("satisfaction"))
    detail::load_satisfaction(csv::read_file(m.path_of("satisfaction")), m, ds);
  if (m.has_table("behaviors")) detail::load_behaviors(m.path_of("behaviors"), ds);
  if (m.has_table("explanations"))
    detail::load_explanations(csv::read_file(m.path_of("explanations")), ds);

  ds.group_universe = m.groups;
  ds.sustainable_kinds = m.sustainable_kinds;
  ds.sustainable_green_reference = m.sustainable_green_reference;
  ds.epsilon = m.epsilon;
  ds.decay = m.decay;
  ds.familiar_policy = m.familiar_policy;
  ds.units = m.units;
  ds.paired_higher_is_better = m.paired_higher_is_better;

  ds.finalize();
  ValidationReport report = validate_dataset(ds);
  if (!report.usable()) throw ValidationError(std::move(report));
  return ds;
}

inline Dataset load_dataset_path(const std::string& manifest_path) {
  return load_dataset(load_manifest(manifest_path));
}

// ---- canonical serialization --------------------------------------------------

namespace detail {

inline std::string opt_str(const std::optional<std::string>& v) { return v ? *v : ""; }
inline std::string opt_bool(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}
inline std::string opt_num(const std::optional<double>& v) {
  return v ? format_double(*v) : "";
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace detail

// Writes the dataset's canonical form: one file per present table plus a
// manifest.json naming them. Canonical form is a fixed point of
// load_dataset followed by write_dataset.
inline void write_dataset(const Dataset& ds, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto path_in = [&](const std::string& name) { return dir + "/" + name; };
  nlohmann::json tables;

  {
    std::vector<std::string> header = {"item_id",   "carbon_footprint",
                                       "is_green",  "is_harmful",
                                       "lci_score", "producer_id",
                                       "producer_region", "sustainability_label"};
    if (ds.has_is_local_column) header.push_back("is_local");
    if (ds.has_category_column) header.push_back("category");
    std::string text = csv::format_row(header);
    for (const auto& it : ds.catalog) {
      std::vector<std::string> cells = {it.item_id,
                                        detail::opt_num(it.carbon_footprint),
                                        detail::opt_bool(it.is_green),
                                        detail::opt_bool(it.is_harmful),
                                        detail::opt_num(it.lci_score),
                                        detail::opt_str(it.producer_id),
                                        detail::opt_str(it.producer_region),
                                        detail::opt_bool(it.sustainability_label)};
      if (ds.has_is_local_column) cells.push_back(detail::opt_bool(it.is_local));
      if (ds.has_category_column) cells.push_back(detail::opt_str(it.category));
      text += csv::format_row(cells);
    }
    detail::write_text(path_in("catalog.csv"), text);
    tables["catalog"] = "catalog.csv";
  }

  {
    std::string text = csv::format_row({"user_id", "groups", "region", "familiar_items"});
    for (const auto& u : ds.users) {
      std::vector<std::string> fam(u.familiar_items.begin(), u.familiar_items.end());
      text += csv::format_row({u.user_id, join_list(u.group_ids),
                               detail::opt_str(u.region), join_list(fam)});
    }
    detail::write_text(path_in("users.csv"), text);
    tables["users"] = "users.csv";
  }

  {
    std::string text = csv::format_row({"user_id", "rank", "item_id", "timestamp"});
    for (const auto& rec : ds.recommendations)
      for (std::size_t i = 0; i < rec.items.size(); ++i)
        text += csv::format_row({rec.user_id, std::to_string(i + 1), rec.items[i],
                                 i == 0 ? detail::opt_str(rec.timestamp) : ""});
    detail::write_text(path_in("recommendations.csv"), text);
    tables["recommendations"] = "recommendations.csv";
  }

  if (ds.has_relevance_table) {
    std::string text = csv::format_row({"user_id", "item_id", "relevance"});
    for (const auto& [key, v] : ds.relevance)
      text += csv::format_row({key.first, key.second, format_double(v)});
    detail::write_text(path_in("relevance.csv"), text);
    tables["relevance"] = "relevance.csv";
  }

  if (ds.has_similarity_table) {
    std::string text = csv::format_row({"item_a", "item_b", "sim"});
    for (const auto& [key, v] : ds.similarity)
      text += csv::format_row({key.first, key.second, format_double(v)});
    detail::write_text(path_in("similarity.csv"), text);
    tables["similarity"] = "similarity.csv";
  }

  if (ds.has_item_features) {
    std::size_t width = 0;
    for (const auto& [id, feats] : ds.item_features)
      width = feats.size() > width ? feats.size() : width;
    std::vector<std::string> header = {"item_id"};
    for (std::size_t i = 0; i < width; ++i) header.push_back("f" + std::to_string(i));
    std::string text = csv::format_row(header);
    for (const auto& [id, feats] : ds.item_features) {
      std::vector<std::string> cells = {id};
      for (std::size_t i = 0; i < width; ++i)
        cells.push_back(i < feats.size() ? format_double(feats[i]) : "0");
      text += csv::format_row(cells);
    }
    detail::write_text(path_in("item_features.csv"), text);
    tables["item_features"] = "item_features.csv";
  }

  if (ds.energy) {
    std::string text = csv::format_row(
        {"e_inference_kwh", "n_rec", "ec_build_kwh", "n_epoch", "n_data_processed"});
    text += csv::format_row({format_double(ds.energy->e_inference_kwh),
                             std::to_string(ds.energy->n_rec),
                             format_double(ds.energy->ec_build_kwh),
                             std::to_string(ds.energy->n_epoch),
                             std::to_string(ds.energy->n_data_processed)});
    detail::write_text(path_in("energy.csv"), text);
    tables["energy"] = "energy.csv";
  }

  if (ds.has_paired_table) {
    std::string text = csv::format_row({"kind", "baseline", "treatment", "unit"});
    for (const auto& p : ds.paired)
      text += csv::format_row(
          {p.kind, format_double(p.baseline), format_double(p.treatment), p.unit});
    detail::write_text(path_in("paired.csv"), text);
    tables["paired"] = "paired.csv";
  }

  if (ds.has_accessibility_table && ds.accessibility) {
    std::string text = csv::format_row({"artifact_id", "group", "score"});
    for (const auto& [artifact, per_group] : ds.accessibility->scores)
      for (const auto& [g, s] : per_group)
        text += csv::format_row({artifact, g, format_double(s)});
    detail::write_text(path_in("accessibility.csv"), text);
    tables["accessibility"] = "accessibility.csv";
  }

  if (ds.has_satisfaction_table) {
    std::vector<SatisfactionRow> rows = ds.satisfaction_rows;
    std::stable_sort(rows.begin(), rows.end(), [](const SatisfactionRow& a, const SatisfactionRow& b) {
      if (a.user_id != b.user_id) return a.user_id < b.user_id;
      return a.t < b.t;
    });
    std::string text = csv::format_row({"user_id", "t", "value"});
    for (const auto& r : rows)
      text += csv::format_row({r.user_id, std::to_string(r.t), format_double(r.value)});
    detail::write_text(path_in("satisfaction.csv"), text);
    tables["satisfaction"] = "satisfaction.csv";
  }

  if (ds.has_behaviors_table) {
    std::string text;
    for (const auto& ev : ds.behaviors) {
      nlohmann::json obj;
      obj["user"] = ev.user_id;
      obj["kind"] = ev.behavior_kind;
      if (ev.item_id) obj["item"] = *ev.item_id;
      if (ev.timestamp) obj["ts"] = *ev.timestamp;
      text += obj.dump() + "\n";
    }
    detail::write_text(path_in("behaviors.jsonl"), text);
    tables["behaviors"] = "behaviors.jsonl";
  }

  if (ds.has_explanations_table) {
    std::vector<ExplanationRecord> rows = ds.explanations;
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ExplanationRecord& a, const ExplanationRecord& b) {
                       if (a.user_id != b.user_id) return a.user_id < b.user_id;
                       return a.explanation_id < b.explanation_id;
                     });
    std::string text = csv::format_row({"user_id", "explanation_id", "score"});
    for (const auto& r : rows)
      text += csv::format_row({r.user_id, r.explanation_id, format_double(r.interpret_score)});
    detail::write_text(path_in("explanations.csv"), text);
    tables["explanations"] = "explanations.csv";
  }

  nlohmann::json manifest;
  manifest["tables"] = tables;
  manifest["units"] = {{"energy", ds.units.energy},
                       {"carbon", ds.units.carbon},
                       {"data", ds.units.data}};
  manifest["satisfaction_scale"] = {{"min", 0.0}, {"max", 1.0}};
  if (!ds.group_universe.empty()) manifest["groups"] = ds.group_universe;
  {
    nlohmann::json sb;
    sb["kinds"] = std::vector<std::string>(ds.sustainable_kinds.begin(),
                                           ds.sustainable_kinds.end());
    sb["green_item_reference"] = ds.sustainable_green_reference;
    manifest["sustainable_behaviors"] = sb;
  }
  {
    nlohmann::json b;
    b["green"] = "is_green";
    b["harmful"] = "is_harmful";
    b["label"] = "sustainability_label";
    if (ds.has_is_local_column) b["is_local"] = "is_local";
    if (ds.has_category_column) b["category"] = "category";
    manifest["bindings"] = b;
  }
  manifest["epsilon"] = ds.epsilon;
  if (ds.decay) manifest["decay"] = *ds.decay;
  manifest["familiar_set_policy"] = ds.familiar_policy == FamiliarPolicy::kExplicit
                                        ? "explicit"
                                        : "explicit_plus_behaviors";
  if (!ds.paired_higher_is_better.empty())
    manifest["paired_higher_is_better"] = ds.paired_higher_is_better;
  detail::write_text(path_in("manifest.json"), manifest.dump(2) + "\n");
}

}  // namespace sustainrec
