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
#include <catch2/catch_amalgamated.hpp>

#include <atomic>

#include "sustainrec/report.hpp"
#include "support/testutil.hpp"

using namespace sustainrec;
using nlohmann::json;

TEST_CASE("round12 pins values to 12 significant digits", "[report]") {
  CHECK(format12(0.5) == "0.5");
  CHECK(format12(2.0) == "2");
  CHECK(format12(1.0 / 3.0) == "0.333333333333");
  double r = round12(1.0 / 3.0);
  CHECK(r == 0.333333333333);
  CHECK(round12(r) == r);
  CHECK(round12(0.0) == 0.0);
  double inf = std::numeric_limits<double>::infinity();
  CHECK(round12(inf) == inf);
}

TEST_CASE("run_parallel fills every slot and propagates errors", "[report]") {
  std::vector<int> slots(100, -1);
  run_parallel(slots.size(), 8, [&](std::size_t i) { slots[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < slots.size(); ++i) CHECK(slots[i] == static_cast<int>(i) * 2);

  std::vector<int> single(3, -1);
  run_parallel(single.size(), 1, [&](std::size_t i) { single[i] = 1; });
  CHECK(single == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(run_parallel(10, 4,
                               [](std::size_t i) {
                                 if (i == 5) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("the default metric list mirrors the registry", "[report]") {
  std::vector<std::string> names = default_metric_names();
  REQUIRE(names.size() == 22);
  CHECK(names.front() == "avgcarfi");
  CHECK(names.back() == "labelcoverage");
  for (const auto& n : names) CHECK(is_known_metric(n));
  CHECK_FALSE(is_known_metric("ndcg"));
}

TEST_CASE("compute_metric dispatches every registered name", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig cfg;
  for (const auto& name : default_metric_names()) {
    MetricReport r = compute_metric(ds, cfg, name);
    CHECK(r.metric_name == name);
    INFO("metric " << name);
    CHECK(r.defined());
  }
  CHECK_THROWS_AS(compute_metric(ds, cfg, "ndcg"), std::invalid_argument);
}

TEST_CASE("config overrides beat manifest tolerances", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig loose;
  loose.epsilon = 1.0;
  MetricReport parity = compute_metric(ds, loose, "parity");
  CHECK(parity.details.at("epsilon") == 1.0);
  CHECK(parity.details.at("satisfied") == 1.0);

  EvalConfig decayed;
  decayed.decay = 0.5;
  MetricReport loyal = compute_metric(ds, decayed, "loyalty");
  CHECK(loyal.per_user.at("u1") == (0.5 * 0.5 + 1.0) / 1.5);

  EvalConfig scoped;
  scoped.pef_category = "food";
  CHECK(compute_metric(ds, scoped, "pef").undefined_reason == "no-category-column");
}

TEST_CASE("label coverage report carries every field coverage", "[report]") {
  Dataset ds = testutil::showcase();
  MetricReport r = label_coverage_report(ds);
  REQUIRE(r.defined());
  CHECK(r.value == 0.8);
  REQUIRE(r.details.size() == 7);
  CHECK(r.details.at("is_green") == 0.8);
  CHECK(r.details.at("carbon_footprint") == 0.3);
  CHECK(r.details.at("producer_id") == 0.6);

  Dataset empty;
  CHECK(label_coverage_report(empty).undefined_reason == "empty-catalog");
}

TEST_CASE("evaluate runs the requested metrics in request order", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig cfg;
  std::vector<MetricReport> reports = evaluate(ds, cfg, {"girec", "avgcarfi"});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].metric_name == "girec");
  CHECK(reports[1].metric_name == "avgcarfi");
  CHECK(reports[1].value == 4.0);
}

TEST_CASE("metric json carries only populated sections", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig cfg;
  json ok = metric_json(compute_metric(ds, cfg, "avgcarfi"));
  CHECK(ok["status"] == "ok");
  CHECK(ok["value"] == 4.0);
  CHECK(ok["coverage"] == 0.5);
  CHECK(ok["per_user"]["u1"] == 3.0);
  CHECK_FALSE(ok.contains("reason"));
  CHECK_FALSE(ok.contains("per_group"));
  CHECK(ok["notes"].size() == 1);

  MetricReport missing;
  missing.metric_name = "ecrec";
  missing.undefined_reason = "missing-table";
  json undef = metric_json(missing);
  CHECK(undef["status"] == "undefined");
  CHECK(undef["reason"] == "missing-table");
  CHECK_FALSE(undef.contains("value"));
}

TEST_CASE("evaluate json wraps metrics with engine and units", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig cfg;
  json doc = evaluate_json(ds, evaluate(ds, cfg, default_metric_names()));
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["engine"]["name"] == "sustainrec");
  CHECK(doc["engine"]["version"] == "0.1.0");
  CHECK(doc["units"]["energy"] == "kWh");
  CHECK(doc["units"]["carbon"] == "kgCO2e");
  REQUIRE(doc["metrics"].size() == 22);
  CHECK(doc["metrics"]["girec"]["value"] == 0.5);
  CHECK(doc["metrics"]["labelcoverage"]["details"].size() == 7);
}

TEST_CASE("reports serialize to the same bytes on every run", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig serial;
  EvalConfig wide;
  wide.threads = 8;
  std::string once = evaluate_json(ds, evaluate(ds, serial, default_metric_names())).dump(2);
  std::string again = evaluate_json(ds, evaluate(ds, serial, default_metric_names())).dump(2);
  std::string parallel = evaluate_json(ds, evaluate(ds, wide, default_metric_names())).dump(2);
  CHECK(once == again);
  CHECK(once == parallel);
}

TEST_CASE("csv rendering sorts metrics and labels each row", "[report]") {
  Dataset ds = testutil::showcase();
  EvalConfig cfg;
  std::string text = evaluate_csv(evaluate(ds, cfg, {"girec", "avgcarfi"}));
  auto lines = testutil::split_lines(text);
  REQUIRE(lines.size() >= 8);
  CHECK(lines[0] == "metric,field,entity,value");
  CHECK(lines[1] == "avgcarfi,status,,ok");
  CHECK(lines[2] == "avgcarfi,value,,4");
  CHECK(lines[3] == "avgcarfi,coverage,,0.5");
  CHECK(lines[4] == "avgcarfi,per_user,u1,3");
  CHECK(lines[5] == "avgcarfi,per_user,u2,5");
  bool found_note = false;
  for (const auto& l : lines)
    found_note = found_note || l.find("avgcarfi,note,,1 user(s) excluded") == 0;
  CHECK(found_note);

  std::string undef = evaluate_csv(evaluate(testutil::tiny_dataset(), cfg, {"ecrec"}));
  CHECK(undef.find("ecrec,status,,undefined\n") != std::string::npos);
  CHECK(undef.find("ecrec,reason,,missing-table\n") != std::string::npos);
}

TEST_CASE("coverage links each field to the metrics it feeds", "[report]") {
  CHECK(metrics_fed_by("carbon_footprint") == std::vector<std::string>{"avgcarfi"});
  CHECK(metrics_fed_by("is_green") == std::vector<std::string>{"girec"});
  CHECK(metrics_fed_by("is_harmful") == std::vector<std::string>{"hier"});
  CHECK(metrics_fed_by("lci_score") == std::vector<std::string>{"avglci"});
  CHECK(metrics_fed_by("producer_id") == std::vector<std::string>{"pef"});
  CHECK(metrics_fed_by("producer_region") == std::vector<std::string>{"lbpr"});
  CHECK(metrics_fed_by("sustainability_label") == std::vector<std::string>{"labelcoverage"});
  CHECK(metrics_fed_by("nonexistent").empty());

  Dataset ds = testutil::showcase();
  json doc = coverage_json(ds);
  CHECK(doc["schema_version"] == "1");
  REQUIRE(doc["fields"].size() == 7);
  CHECK(doc["fields"]["is_green"]["status"] == "ok");
  CHECK(doc["fields"]["is_green"]["value"] == 0.8);
  CHECK(doc["fields"]["is_green"]["feeds"] == json::array({"girec"}));

  std::string text = coverage_csv(ds);
  auto lines = testutil::split_lines(text);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "field,value,feeds");
  CHECK(lines[1] == "carbon_footprint,0.3,avgcarfi");
  CHECK(lines[7] == "sustainability_label,0.8,labelcoverage");
}

TEST_CASE("rerank rendering covers frontiers and skipped users", "[report]") {
  UserFrontier ranked;
  ranked.user_id = "u1";
  FrontierPoint pt;
  pt.weight = 0.5;
  pt.accuracy = 1.0;
  pt.sustainability = 0.25;
  pt.list = {"a", "b"};
  ranked.points = {pt};
  UserFrontier skipped;
  skipped.user_id = "u2";
  skipped.skipped_reason = "pool-smaller-than-k";

  json doc = rerank_json({ranked, skipped}, 2, "green", 11);
  CHECK(doc["k"] == 2);
  CHECK(doc["objective"] == "green");
  CHECK(doc["grid_size"] == 11);
  REQUIRE(doc["users"]["u1"]["frontier"].size() == 1);
  CHECK(doc["users"]["u1"]["frontier"][0]["weight"] == 0.5);
  CHECK(doc["users"]["u1"]["frontier"][0]["items"] == json::array({"a", "b"}));
  CHECK(doc["users"]["u2"]["skipped"] == "pool-smaller-than-k");

  auto lines = testutil::split_lines(rerank_csv({ranked, skipped}));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "user_id,weight,accuracy,sustainability,items");
  CHECK(lines[1] == "u1,0.5,1,0.25,a;b");
  CHECK(lines[2] == "u2,,,,skipped: pool-smaller-than-k");
}

TEST_CASE("green filter rendering lists items and fill count", "[report]") {
  UserGreenList done;
  done.user_id = "u1";
  done.result.list = {"c", "a"};
  done.result.non_green_used = 1;
  UserGreenList skipped;
  skipped.user_id = "u2";
  skipped.skipped_reason = "pool-smaller-than-k";

  json doc = green_filter_json({done, skipped}, 2);
  CHECK(doc["mode"] == "green-filter");
  CHECK(doc["users"]["u1"]["items"] == json::array({"c", "a"}));
  CHECK(doc["users"]["u1"]["non_green_used"] == 1);
  CHECK(doc["users"]["u2"]["skipped"] == "pool-smaller-than-k");

  auto lines = testutil::split_lines(green_filter_csv({done, skipped}));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "user_id,items,non_green_used");
  CHECK(lines[1] == "u1,c;a,1");
  CHECK(lines[2] == "u2,skipped: pool-smaller-than-k,");
}
