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

#include "sustainrec/manifest.hpp"
#include "support/testutil.hpp"

using namespace sustainrec;
using nlohmann::json;

namespace {

json minimal() {
  return json{{"tables", {{"catalog", "catalog.csv"}}}};
}

}  // namespace

TEST_CASE("manifest parses tables, scale, groups and bindings", "[manifest]") {
  json doc = {
      {"tables", {{"catalog", "c.csv"}, {"users", "u.csv"}, {"energy", "e.csv"}}},
      {"units", {{"energy", "Wh"}, {"carbon", "gCO2e"}}},
      {"satisfaction_scale", {{"min", 1}, {"max", 5}}},
      {"groups", {"B", "A", "A"}},
      {"sustainable_behaviors", {{"kinds", {"eco"}}, {"green_item_reference", true}}},
      {"bindings", {{"green", "eco_flag"}, {"category", "kind"}}},
      {"epsilon", 0.2},
      {"decay", 0.9},
      {"familiar_set_policy", "explicit_plus_behaviors"},
      {"paired_higher_is_better", {{"health", false}}},
  };
  DatasetManifest m = parse_manifest(doc, "m.json", "/data");
  CHECK(m.path_of("catalog") == "/data/c.csv");
  CHECK(m.path_of("users") == "/data/u.csv");
  CHECK(m.has_table("energy"));
  CHECK_FALSE(m.has_table("paired"));
  CHECK(m.units.energy == "Wh");
  CHECK(m.units.carbon == "gCO2e");
  CHECK(m.units.data == "record");
  CHECK(m.satisfaction_min == 1.0);
  CHECK(m.satisfaction_max == 5.0);
  CHECK(m.groups == std::vector<std::string>{"A", "B"});
  CHECK(m.sustainable_kinds.count("eco") == 1);
  CHECK(m.sustainable_green_reference);
  CHECK(m.green_column == "eco_flag");
  CHECK(m.harmful_column == "is_harmful");
  CHECK(m.category_column == "kind");
  CHECK(m.epsilon == 0.2);
  CHECK(m.decay == 0.9);
  CHECK(m.familiar_policy == FamiliarPolicy::kExplicitPlusBehaviors);
  CHECK(m.paired_higher_is_better.at("health") == false);
}

TEST_CASE("manifest requires a catalog table", "[manifest]") {
  json doc = {{"tables", {{"users", "u.csv"}}}};
  REQUIRE_THROWS_AS(parse_manifest(doc, "m.json", ""), SchemaError);
}

TEST_CASE("manifest rejects unknown keys at every level", "[manifest]") {
  json top = minimal();
  top["surprise"] = 1;
  REQUIRE_THROWS_AS(parse_manifest(top, "m.json", ""), SchemaError);

  json tables = minimal();
  tables["tables"]["sidecar"] = "s.csv";
  REQUIRE_THROWS_AS(parse_manifest(tables, "m.json", ""), SchemaError);

  json units = minimal();
  units["units"] = {{"mass", "kg"}};
  REQUIRE_THROWS_AS(parse_manifest(units, "m.json", ""), SchemaError);

  json bindings = minimal();
  bindings["bindings"] = {{"greenish", "x"}};
  REQUIRE_THROWS_AS(parse_manifest(bindings, "m.json", ""), SchemaError);

  json behaviors = minimal();
  behaviors["sustainable_behaviors"] = {{"kindz", {"eco"}}};
  REQUIRE_THROWS_AS(parse_manifest(behaviors, "m.json", ""), SchemaError);

  json scale = minimal();
  scale["satisfaction_scale"] = {{"mid", 3}};
  REQUIRE_THROWS_AS(parse_manifest(scale, "m.json", ""), SchemaError);
}

TEST_CASE("manifest rejects out-of-range tolerances", "[manifest]") {
  json eps = minimal();
  eps["epsilon"] = 0.0;
  REQUIRE_THROWS_AS(parse_manifest(eps, "m.json", ""), SchemaError);

  json decay = minimal();
  decay["decay"] = 1.5;
  REQUIRE_THROWS_AS(parse_manifest(decay, "m.json", ""), SchemaError);

  json decay0 = minimal();
  decay0["decay"] = 0.0;
  REQUIRE_THROWS_AS(parse_manifest(decay0, "m.json", ""), SchemaError);

  json scale = minimal();
  scale["satisfaction_scale"] = {{"min", 2}, {"max", 2}};
  REQUIRE_THROWS_AS(parse_manifest(scale, "m.json", ""), SchemaError);
}

TEST_CASE("manifest rejects unknown enum values", "[manifest]") {
  json policy = minimal();
  policy["familiar_set_policy"] = "psychic";
  REQUIRE_THROWS_AS(parse_manifest(policy, "m.json", ""), SchemaError);

  json paired = minimal();
  paired["paired_higher_is_better"] = {{"mood", true}};
  REQUIRE_THROWS_AS(parse_manifest(paired, "m.json", ""), SchemaError);
}

TEST_CASE("null table entries mean the table is absent", "[manifest]") {
  json doc = minimal();
  doc["tables"]["energy"] = nullptr;
  DatasetManifest m = parse_manifest(doc, "m.json", "");
  CHECK_FALSE(m.has_table("energy"));
}

TEST_CASE("absolute table paths ignore the manifest directory", "[manifest]") {
  json doc = json{{"tables", {{"catalog", "/abs/catalog.csv"}}}};
  DatasetManifest m = parse_manifest(doc, "m.json", "/data");
  CHECK(m.path_of("catalog") == "/abs/catalog.csv");
}

TEST_CASE("load_manifest distinguishes unreadable files from bad JSON", "[manifest]") {
  REQUIRE_THROWS_AS(load_manifest("/nonexistent/manifest.json"), IoError);
  testutil::TempDir tmp("manifest");
  testutil::spit(tmp.file("broken.json"), "{not json");
  REQUIRE_THROWS_AS(load_manifest(tmp.file("broken.json")), SchemaError);
}

TEST_CASE("defaults cover units, epsilon, policy and bindings", "[manifest]") {
  DatasetManifest m = parse_manifest(minimal(), "m.json", "");
  CHECK(m.units.energy == "kWh");
  CHECK(m.units.carbon == "kgCO2e");
  CHECK(m.epsilon == 0.05);
  CHECK_FALSE(m.decay.has_value());
  CHECK(m.familiar_policy == FamiliarPolicy::kExplicit);
  CHECK(m.green_column == "is_green");
  CHECK(m.label_column == "sustainability_label");
  CHECK(m.is_local_column.empty());
  CHECK(m.satisfaction_min == 0.0);
  CHECK(m.satisfaction_max == 1.0);
}
