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

#include "sustainrec/validate.hpp"
#include "support/testutil.hpp"

using namespace sustainrec;

namespace {

Dataset base() {
  Dataset ds;
  ItemRecord a;
  a.item_id = "a";
  ItemRecord b;
  b.item_id = "b";
  ds.catalog = {a, b};
  UserRecord u1;
  u1.user_id = "u1";
  u1.group_ids = {"A"};
  UserRecord u2;
  u2.user_id = "u2";
  u2.group_ids = {"B"};
  ds.users = {u1, u2};
  ds.finalize();
  return ds;
}

std::size_t soft_count(const ValidationReport& r) {
  return r.violations.size() - r.hard_count();
}

bool mentions(const ValidationReport& r, const std::string& text) {
  for (const auto& v : r.violations)
    if (v.message.find(text) != std::string::npos || v.where.find(text) != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_CASE("a consistent dataset validates clean", "[validate]") {
  ValidationReport r = validate_dataset(base());
  CHECK(r.violations.empty());
  CHECK(r.usable());
}

TEST_CASE("duplicate entity ids are hard violations", "[validate]") {
  Dataset ds = base();
  ItemRecord dup;
  dup.item_id = "a";
  ds.catalog.push_back(dup);
  UserRecord udup;
  udup.user_id = "u1";
  ds.users.push_back(udup);
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 2);
  CHECK(mentions(r, "duplicate item_id"));
  CHECK(mentions(r, "duplicate user_id"));
}

TEST_CASE("groups outside the declared universe are rejected", "[validate]") {
  Dataset ds = base();
  ds.group_universe = {"A"};
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 1);
  CHECK(mentions(r, "'B' not in declared universe"));

  Dataset open = base();
  CHECK(validate_dataset(open).usable());
}

TEST_CASE("familiar items must exist in the catalog", "[validate]") {
  Dataset ds = base();
  ds.users[0].familiar_items.insert("ghost");
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 1);
  CHECK(mentions(r, "familiar item 'ghost'"));
}

TEST_CASE("recommendation rows are cross-checked", "[validate]") {
  Dataset ds = base();
  ds.rec_rows.push_back({"ghost", 1, "a", {}});
  ds.rec_rows.push_back({"u1", 0, "b", {}});
  ds.rec_rows.push_back({"u1", 2, "phantom", {}});
  ds.rec_rows.push_back({"u2", 3, "a", {}});
  ds.rec_rows.push_back({"u2", 3, "b", {}});
  ds.rec_rows.push_back({"u2", 4, "a", {}});
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "unknown user_id"));
  CHECK(mentions(r, "rank must be >= 1"));
  CHECK(mentions(r, "unknown item_id 'phantom'"));
  CHECK(mentions(r, "duplicate rank 3"));
  CHECK(mentions(r, "item 'a' listed twice"));
  CHECK(r.hard_count() == 5);
}

TEST_CASE("relevance judgments are range and key checked", "[validate]") {
  Dataset ds = base();
  ds.relevance_rows.push_back({"u1", "a", 1.5});
  ds.relevance_rows.push_back({"u1", "b", 0.5});
  ds.relevance_rows.push_back({"u1", "b", 0.7});
  ds.relevance_rows.push_back({"ghost", "a", 0.5});
  ds.has_relevance_table = true;
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "relevance out of [0,1]"));
  CHECK(mentions(r, "duplicate judgment"));
  CHECK(mentions(r, "unknown user_id"));
  CHECK(r.hard_count() == 3);
}

TEST_CASE("similarity rows distinguish conflicts from duplicates", "[validate]") {
  Dataset ds = base();
  ds.similarity_rows.push_back({"a", "b", 0.5});
  ds.similarity_rows.push_back({"b", "a", 0.5});
  ds.has_similarity_table = true;
  ds.finalize();
  ValidationReport dup = validate_dataset(ds);
  CHECK(dup.hard_count() == 0);
  CHECK(soft_count(dup) == 1);
  CHECK(dup.usable());
  CHECK(mentions(dup, "duplicate similarity row"));

  ds.similarity_rows[1].sim = 0.6;
  ValidationReport conflict = validate_dataset(ds);
  CHECK(conflict.hard_count() == 1);
  CHECK(mentions(conflict, "conflicting similarity values"));

  Dataset self = base();
  self.similarity_rows.push_back({"a", "a", 0.4});
  self.similarity_rows.push_back({"a", "ghost", 2.0});
  self.has_similarity_table = true;
  self.finalize();
  ValidationReport r = validate_dataset(self);
  CHECK(mentions(r, "self-similarity must be 1"));
  CHECK(mentions(r, "unknown item_id 'ghost'"));
  CHECK(mentions(r, "similarity out of [0,1]"));
}

TEST_CASE("item features are checked for keys and sign", "[validate]") {
  Dataset ds = base();
  ds.item_features["ghost"] = {1.0};
  ds.item_features["a"] = {0.5, -0.1};
  ds.has_item_features = true;
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "item_features:ghost"));
  CHECK(mentions(r, "negative feature value"));
  CHECK(r.hard_count() == 2);
}

TEST_CASE("energy ledger quantities must be nonnegative", "[validate]") {
  Dataset ds = base();
  ds.energy = EnergyLedger{1.0, -5, 2.0, 1, 1};
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 1);
  CHECK(mentions(r, "negative quantity"));
}

TEST_CASE("paired observations are kind and range checked", "[validate]") {
  Dataset ds = base();
  ds.paired.push_back({"mood", 1.0, 2.0, "", true});
  ds.paired.push_back({"energy", -1.0, 2.0, "kWh", true});
  ds.paired.push_back({"reuse_rate", 0.2, 1.4, "rate", true});
  ds.paired.push_back({"health", -50.0, 10.0, "score", true});
  ds.has_paired_table = true;
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "unknown kind"));
  CHECK(mentions(r, "energy values must be >= 0"));
  CHECK(mentions(r, "reuse rates out of [0,1]"));
  CHECK(r.hard_count() == 3);
}

TEST_CASE("accessibility scores are checked and gaps are soft", "[validate]") {
  Dataset ds = base();
  ds.accessibility_rows.push_back({"q1", "A", 0.5});
  ds.accessibility_rows.push_back({"q1", "B", 0.7});
  ds.accessibility_rows.push_back({"q2", "A", 0.9});
  ds.has_accessibility_table = true;
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 0);
  CHECK(soft_count(r) == 1);
  CHECK(mentions(r, "not scored for group 'B'"));

  ds.accessibility_rows.push_back({"q2", "A", 0.1});
  ds.accessibility_rows.push_back({"q2", "C", 1.2});
  ds.group_universe = {"A", "B"};
  ds.finalize();
  ValidationReport bad = validate_dataset(ds);
  CHECK(mentions(bad, "conflicting scores"));
  CHECK(mentions(bad, "score out of [0,1]"));
  CHECK(mentions(bad, "group not in declared universe"));
}

TEST_CASE("satisfaction series are checked and gaps are soft", "[validate]") {
  Dataset ds = base();
  ds.satisfaction_rows.push_back({"u1", 1, 0.5});
  ds.satisfaction_rows.push_back({"u1", 3, 0.5});
  ds.has_satisfaction_table = true;
  ds.finalize();
  ValidationReport r = validate_dataset(ds);
  CHECK(r.hard_count() == 0);
  CHECK(soft_count(r) == 1);
  CHECK(mentions(r, "series has gaps"));

  Dataset bad = base();
  bad.satisfaction_rows.push_back({"ghost", 1, 0.5});
  bad.satisfaction_rows.push_back({"u1", 0, 0.5});
  bad.satisfaction_rows.push_back({"u2", 1, 1.5});
  bad.satisfaction_rows.push_back({"u2", 1, 1.5});
  bad.has_satisfaction_table = true;
  bad.finalize();
  ValidationReport br = validate_dataset(bad);
  CHECK(mentions(br, "unknown user_id"));
  CHECK(mentions(br, "t must be >= 1"));
  CHECK(mentions(br, "value outside declared scale"));
  CHECK(mentions(br, "duplicate period 1"));
}

TEST_CASE("behavior events are cross-checked", "[validate]") {
  Dataset ds = base();
  ds.behaviors.push_back({"ghost", "click", {}, {}});
  ds.behaviors.push_back({"u1", "", {}, {}});
  ds.behaviors.push_back({"u1", "click", std::optional<std::string>("phantom"), {}});
  ds.has_behaviors_table = true;
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "unknown user_id"));
  CHECK(mentions(r, "empty behavior kind"));
  CHECK(mentions(r, "unknown item_id 'phantom'"));
  CHECK(r.hard_count() == 3);
}

TEST_CASE("explanations are cross-checked", "[validate]") {
  Dataset ds = base();
  ds.explanations.push_back({"ghost", "e1", 0.5});
  ds.explanations.push_back({"u1", "e2", 1.5});
  ds.explanations.push_back({"u1", "e3", 0.5});
  ds.explanations.push_back({"u1", "e3", 0.5});
  ds.has_explanations_table = true;
  ValidationReport r = validate_dataset(ds);
  CHECK(mentions(r, "unknown user_id"));
  CHECK(mentions(r, "score out of [0,1]"));
  CHECK(mentions(r, "duplicate explanation_id"));
  CHECK(r.hard_count() == 3);
}

TEST_CASE("report summary lists hard violations up to a limit", "[validate]") {
  ValidationReport r;
  for (int i = 0; i < 7; ++i)
    r.violations.push_back({true, "t:" + std::to_string(i), "boom"});
  r.violations.push_back({false, "soft", "quiet"});
  std::string s = r.summary();
  CHECK(s.find("t:0") != std::string::npos);
  CHECK(s.find("t:4") != std::string::npos);
  CHECK(s.find("t:5") == std::string::npos);
  CHECK(s.find("...") != std::string::npos);
  CHECK(s.find("quiet") == std::string::npos);
  CHECK_FALSE(r.usable());
}
