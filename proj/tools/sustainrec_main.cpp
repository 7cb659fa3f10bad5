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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sustainrec/sustainrec.hpp"

namespace {

// Exit taxonomy: 0 success, 1 usage, 2 data, 3 internal.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int threads_from_env() {
  const char* raw = std::getenv("SUSTAIN_EVAL_THREADS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1)
    throw UsageError("SUSTAIN_EVAL_THREADS must be a positive integer");
  return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw sustainrec::IoError("cannot open output file '" + out_path + "'");
  f << text;
  if (!f) throw sustainrec::IoError("cannot write output file '" + out_path + "'");
}

struct CommonOpts {
  std::string manifest_path;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--manifest", opts.manifest_path, "dataset manifest (JSON)")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_path, "write report here instead of stdout");
}

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

// ---- evaluate ------------------------------------------------------------

struct EvaluateOpts {
  CommonOpts common;
  std::string metrics;
  double epsilon = 0.0;
  bool epsilon_set = false;
  double decay = 0.0;
  bool decay_set = false;
  std::string pef_category;
};

int run_evaluate(const EvaluateOpts& opts) {
  sustainrec::Dataset ds = sustainrec::load_dataset_path(opts.common.manifest_path);
  sustainrec::EvalConfig cfg;
  cfg.threads = threads_from_env();
  if (opts.epsilon_set) {
    if (opts.epsilon <= 0.0) throw UsageError("--epsilon must be positive");
    cfg.epsilon = opts.epsilon;
  }
  if (opts.decay_set) {
    if (opts.decay <= 0.0 || opts.decay > 1.0)
      throw UsageError("--decay must be in (0,1]");
    cfg.decay = opts.decay;
  }
  if (!opts.pef_category.empty()) cfg.pef_category = opts.pef_category;

  std::vector<std::string> names;
  if (opts.metrics.empty()) {
    names = sustainrec::default_metric_names();
  } else {
    names = sustainrec::split_list(opts.metrics, ',');
    for (const auto& n : names)
      if (!sustainrec::is_known_metric(n)) throw UsageError("unknown metric '" + n + "'");
  }
  if (names.empty()) throw UsageError("empty metric selection");

  std::vector<sustainrec::MetricReport> reports = sustainrec::evaluate(ds, cfg, names);
  if (opts.common.format == "csv")
    emit(sustainrec::evaluate_csv(reports), opts.common.out_path);
  else
    emit(render(sustainrec::evaluate_json(ds, reports)), opts.common.out_path);
  return kExitOk;
}

// ---- coverage ------------------------------------------------------------

int run_coverage(const CommonOpts& opts) {
  sustainrec::Dataset ds = sustainrec::load_dataset_path(opts.manifest_path);
  if (ds.catalog.empty()) throw sustainrec::IoError("catalog has no items");
  if (opts.format == "csv")
    emit(sustainrec::coverage_csv(ds), opts.out_path);
  else
    emit(render(sustainrec::coverage_json(ds)), opts.out_path);
  return kExitOk;
}

// ---- rerank --------------------------------------------------------------

struct RerankOpts {
  CommonOpts common;
  std::size_t k = 0;
  std::string objective = "green";
  std::size_t grid = 11;
  bool green_filter = false;
};

int run_rerank(const RerankOpts& opts) {
  sustainrec::Dataset ds = sustainrec::load_dataset_path(opts.common.manifest_path);
  if (opts.k < 1) throw UsageError("--k must be at least 1");
  if (opts.grid < 1) throw UsageError("--grid must be at least 1");
  sustainrec::SustainabilityObjective objective;
  try {
    objective = sustainrec::parse_objective(opts.objective);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  int threads = threads_from_env();

  std::vector<sustainrec::RerankProblem> problems =
      sustainrec::build_problems(ds, opts.k, objective);

  if (opts.green_filter) {
    std::vector<sustainrec::UserGreenList> lists(problems.size());
    sustainrec::run_parallel(problems.size(), threads, [&](std::size_t i) {
      lists[i].user_id = problems[i].user_id;
      if (problems[i].pool.size() < opts.k) {
        lists[i].skipped_reason = "pool-smaller-than-k";
        return;
      }
      lists[i].result = sustainrec::green_filter_rerank(problems[i]);
    });
    if (opts.common.format == "csv")
      emit(sustainrec::green_filter_csv(lists), opts.common.out_path);
    else
      emit(render(sustainrec::green_filter_json(lists, opts.k)), opts.common.out_path);
    return kExitOk;
  }

  std::vector<double> grid = sustainrec::uniform_grid(opts.grid);
  std::vector<sustainrec::UserFrontier> frontiers(problems.size());
  sustainrec::run_parallel(problems.size(), threads, [&](std::size_t i) {
    frontiers[i].user_id = problems[i].user_id;
    if (problems[i].pool.size() < opts.k) {
      frontiers[i].skipped_reason = "pool-smaller-than-k";
      return;
    }
    frontiers[i].points = sustainrec::pareto_frontier(problems[i], grid);
  });
  if (opts.common.format == "csv")
    emit(sustainrec::rerank_csv(frontiers), opts.common.out_path);
  else
    emit(render(sustainrec::rerank_json(frontiers, opts.k, opts.objective, opts.grid)),
         opts.common.out_path);
  return kExitOk;
}

// ---- synth ---------------------------------------------------------------

struct SynthOpts {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

sustainrec::SynthConfig parse_synth_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw sustainrec::IoError("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw sustainrec::SchemaError(path, 1,
                                  std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw sustainrec::SchemaError(path, 1, "config must be an object");

  sustainrec::SynthConfig cfg;
  auto count = [&](const char* key, std::int64_t& slot) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer() || doc[key].get<std::int64_t>() < 1)
      throw sustainrec::SchemaError(path, 1,
                                    std::string("'") + key + "' must be a positive integer");
    slot = doc[key].get<std::int64_t>();
  };
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer())
      throw sustainrec::SchemaError(path, 1, "'seed' must be an integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  count("n_users", cfg.n_users);
  count("n_items", cfg.n_items);
  count("n_groups", cfg.n_groups);
  count("n_producers", cfg.n_producers);
  count("list_min", cfg.list_min);
  count("list_max", cfg.list_max);
  count("behaviors_per_user", cfg.behaviors_per_user);
  count("horizon", cfg.horizon);
  count("n_artifacts", cfg.n_artifacts);
  count("explanations_per_user", cfg.explanations_per_user);
  if (cfg.list_max < cfg.list_min)
    throw sustainrec::SchemaError(path, 1, "'list_max' must be >= 'list_min'");
  if (doc.contains("missingness")) {
    if (!doc["missingness"].is_object())
      throw sustainrec::SchemaError(path, 1, "'missingness' must map field to rate");
    for (const auto& [field, rate] : doc["missingness"].items()) {
      if (!rate.is_number() || rate.get<double>() < 0.0 || rate.get<double>() > 1.0)
        throw sustainrec::SchemaError(
            path, 1, "missingness rate for '" + field + "' must be in [0,1]");
      cfg.missingness[field] = rate.get<double>();
    }
  }
  if (doc.contains("sustainable_fraction")) {
    if (!doc["sustainable_fraction"].is_number() ||
        doc["sustainable_fraction"].get<double>() < 0.0 ||
        doc["sustainable_fraction"].get<double>() > 1.0)
      throw sustainrec::SchemaError(path, 1, "'sustainable_fraction' must be in [0,1]");
    cfg.sustainable_fraction = doc["sustainable_fraction"].get<double>();
  }
  auto flag = [&](const char* key, bool& slot) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_boolean())
      throw sustainrec::SchemaError(path, 1, std::string("'") + key + "' must be a boolean");
    slot = doc[key].get<bool>();
  };
  flag("with_similarity", cfg.with_similarity);
  flag("with_energy", cfg.with_energy);
  flag("with_paired", cfg.with_paired);
  flag("with_accessibility", cfg.with_accessibility);
  flag("with_satisfaction", cfg.with_satisfaction);
  flag("with_behaviors", cfg.with_behaviors);
  flag("with_explanations", cfg.with_explanations);
  return cfg;
}

int run_synth(const SynthOpts& opts) {
  sustainrec::SynthConfig cfg;
  if (!opts.config_path.empty()) cfg = parse_synth_config(opts.config_path);
  if (opts.seed_set) cfg.seed = opts.seed;
  sustainrec::Dataset ds = sustainrec::generate(cfg);
  sustainrec::write_dataset(ds, opts.out_dir);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sustainability evaluation for recommender system logs"};
  app.require_subcommand(1);

  EvaluateOpts eval_opts;
  CLI::App* eval_cmd =
      app.add_subcommand("evaluate", "compute sustainability metrics from a dataset");
  add_common(eval_cmd, eval_opts.common);
  eval_cmd->add_option("--metrics,-m", eval_opts.metrics,
                       "comma-separated metric names (default: all)");
  eval_cmd->add_option("--epsilon", eval_opts.epsilon, "fairness tolerance override")
      ->each([&](const std::string&) { eval_opts.epsilon_set = true; });
  eval_cmd->add_option("--decay", eval_opts.decay, "loyalty decay override, in (0,1]")
      ->each([&](const std::string&) { eval_opts.decay_set = true; });
  eval_cmd->add_option("--pef-category", eval_opts.pef_category,
                       "restrict producer exposure fairness to one category");

  CommonOpts cov_opts;
  CLI::App* cov_cmd =
      app.add_subcommand("coverage", "audit label coverage of sustainability fields");
  add_common(cov_cmd, cov_opts);

  RerankOpts rr_opts;
  CLI::App* rr_cmd = app.add_subcommand(
      "rerank", "accuracy/sustainability trade-off lists per user");
  add_common(rr_cmd, rr_opts.common);
  rr_cmd->add_option("--k", rr_opts.k, "list length")->required();
  rr_cmd->add_option("--objective", rr_opts.objective, "sustainability objective")
      ->check(CLI::IsMember({"green", "carbon", "lci"}));
  rr_cmd->add_option("--grid", rr_opts.grid, "number of trade-off weights");
  rr_cmd->add_flag("--green-filter", rr_opts.green_filter,
                   "rank green items first instead of sweeping weights");

  SynthOpts synth_opts;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "write a seeded synthetic dataset directory");
  synth_cmd->add_option("--config", synth_opts.config_path, "generator config (JSON)");
  synth_cmd->add_option("--out", synth_opts.out_dir, "output dataset directory")->required();
  synth_cmd->add_option("--seed", synth_opts.seed, "override the config seed")
      ->each([&](const std::string&) { synth_opts.seed_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_evaluate(eval_opts);
    if (cov_cmd->parsed()) return run_coverage(cov_opts);
    if (rr_cmd->parsed()) return run_rerank(rr_opts);
    if (synth_cmd->parsed()) return run_synth(synth_opts);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sustainrec::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitData;
  } catch (const sustainrec::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitData;
  } catch (const sustainrec::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
