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

#include <cmath>

#include "sustainrec/rerank.hpp"
#include "support/testutil.hpp"

using namespace sustainrec;

namespace {

struct Cand {
  std::string id;
  double rel;
  bool green;
  double carbon = 0.0;
  double lci = 0.0;
};

RerankProblem problem(const std::vector<Cand>& cands, std::size_t k,
                      SustainabilityObjective objective = SustainabilityObjective::kGreenRate) {
  RerankProblem p;
  p.user_id = "u";
  for (const auto& s : cands) p.pool.push_back({s.id, s.rel, s.green, s.carbon, s.lci});
  p.k = k;
  p.objective = objective;
  finalize_problem(p);
  return p;
}

double disc(std::size_t rank) { return 1.0 / std::log2(static_cast<double>(rank) + 1.0); }

}  // namespace

TEST_CASE("rank discount is inverse log of rank plus one", "[rerank]") {
  CHECK(rank_discount(1) == 1.0);
  CHECK(rank_discount(2) == 1.0 / std::log2(3.0));
  CHECK(rank_discount(3) == 0.5);
}

TEST_CASE("ndcg normalizes by the ideal pool ordering", "[rerank]") {
  double v = ndcg_at_k({0.0, 1.0}, {1.0, 0.0}, 2);
  CHECK(v == disc(2));
  CHECK(v == Catch::Approx(0.63093).margin(1e-5));
  CHECK(ndcg_at_k({1.0, 0.0}, {1.0, 0.0}, 2) == 1.0);
  CHECK(ndcg_at_k({0.0, 0.0}, {0.0, 0.0}, 2) == 0.0);
}

TEST_CASE("finalize_problem sorts the pool and fixes statistics", "[rerank]") {
  RerankProblem p;
  p.pool.push_back({"z", 0.2, false, 3.0, 1.0});
  p.pool.push_back({"a", 1.0, true, 7.0, 4.0});
  p.k = 2;
  finalize_problem(p);
  CHECK(p.pool[0].item_id == "a");
  CHECK(p.pool[1].item_id == "z");
  CHECK(p.max_carbon == 7.0);
  CHECK(p.max_lci == 4.0);
  CHECK(p.idcg == 1.0 + 0.2 * disc(2));
}

TEST_CASE("greedy scalarization trades accuracy against greenness", "[rerank]") {
  RerankProblem p = problem({{"a", 1.0, true}, {"b", 0.9, false},
                             {"c", 0.3, true}, {"d", 0.2, false}},
                            2);
  CHECK(scalarized_rerank(p, 1.0) == std::vector<std::string>{"a", "b"});
  CHECK(scalarized_rerank(p, 0.5) == std::vector<std::string>{"a", "c"});
  CHECK(scalarized_rerank(p, 0.0) == std::vector<std::string>{"a", "c"});
}

TEST_CASE("score ties go to the lowest item id", "[rerank]") {
  RerankProblem p = problem({{"n", 0.5, true}, {"m", 0.5, true}}, 1);
  CHECK(scalarized_rerank(p, 0.7) == std::vector<std::string>{"m"});
  CHECK(scalarized_rerank(p, 0.0) == std::vector<std::string>{"m"});
}

TEST_CASE("scalarization validates its inputs", "[rerank]") {
  RerankProblem p = problem({{"a", 1.0, true}}, 2);
  CHECK_THROWS_AS(scalarized_rerank(p, 0.5), std::invalid_argument);
  RerankProblem ok = problem({{"a", 1.0, true}}, 1);
  CHECK_THROWS_AS(scalarized_rerank(ok, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(scalarized_rerank(ok, -0.1), std::invalid_argument);
}

TEST_CASE("zero ideal gain keeps lists defined with zero accuracy", "[rerank]") {
  RerankProblem p = problem({{"a", 0.0, false}, {"b", 0.0, true}}, 1);
  CHECK(p.idcg == 0.0);
  CHECK(scalarized_rerank(p, 0.5) == std::vector<std::string>{"b"});
  auto [acc, sus] = score_list(p, {"b"});
  CHECK(acc == 0.0);
  CHECK(sus == 1.0);
}

TEST_CASE("the uniform grid spans zero to one inclusive", "[rerank]") {
  CHECK(uniform_grid(1) == std::vector<double>{0.5});
  CHECK(uniform_grid(3) == std::vector<double>{0.0, 0.5, 1.0});
  std::vector<double> g = uniform_grid(11);
  REQUIRE(g.size() == 11);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[5] == 0.5);
}

TEST_CASE("the fixture pool yields a three-point frontier", "[rerank]") {
  Dataset ds = testutil::rerank_fixture();
  std::vector<RerankProblem> problems =
      build_problems(ds, 2, SustainabilityObjective::kGreenRate);
  REQUIRE(problems.size() == 1);
  const RerankProblem& p = problems[0];
  CHECK(p.user_id == "w1");
  REQUIRE(p.pool.size() == 4);

  double idcg = 1.0 + 0.3 * disc(2);
  CHECK(p.idcg == idcg);

  std::vector<FrontierPoint> frontier = pareto_frontier(p, uniform_grid(3));
  REQUIRE(frontier.size() == 3);

  CHECK(frontier[0].weight == 0.0);
  CHECK(frontier[0].list == std::vector<std::string>{"c", "d"});
  CHECK(frontier[0].accuracy == (0.25 + 0.05 * disc(2)) / idcg);
  CHECK(frontier[0].sustainability == 1.0);

  CHECK(frontier[1].weight == 0.5);
  CHECK(frontier[1].list == std::vector<std::string>{"a", "c"});
  CHECK(frontier[1].accuracy == (1.0 + 0.25 * disc(2)) / idcg);
  CHECK(frontier[1].sustainability == 0.5);

  CHECK(frontier[2].weight == 1.0);
  CHECK(frontier[2].list == std::vector<std::string>{"a", "b"});
  CHECK(frontier[2].accuracy == 1.0);
  CHECK(frontier[2].sustainability == 0.0);
}

TEST_CASE("identical lists merge onto the smallest weight", "[rerank]") {
  RerankProblem p = problem({{"a", 1.0, true}, {"b", 0.5, true}, {"c", 0.2, true}}, 2);
  std::vector<FrontierPoint> frontier = pareto_frontier(p, uniform_grid(11));
  REQUIRE(frontier.size() == 1);
  CHECK(frontier[0].weight == 0.0);
  CHECK(frontier[0].list == std::vector<std::string>{"a", "b"});
  CHECK(frontier[0].accuracy == 1.0);
  CHECK(frontier[0].sustainability == 1.0);
}

TEST_CASE("greedy frontier points survive exhaustive domination", "[rerank]") {
  RerankProblem p = problem({{"a", 1.0, false}, {"b", 0.8, false}, {"c", 0.6, true},
                             {"d", 0.4, true}, {"e", 0.2, true}, {"f", 0.1, false}},
                            3);
  std::vector<FrontierPoint> frontier = pareto_frontier(p, uniform_grid(11));
  REQUIRE_FALSE(frontier.empty());

  std::vector<std::pair<double, double>> all_scores;
  const std::size_t n = p.pool.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        std::vector<const Candidate*> sel = {&p.pool[i], &p.pool[j], &p.pool[l]};
        std::sort(sel.begin(), sel.end(), [](const Candidate* x, const Candidate* y) {
          if (x->relevance != y->relevance) return x->relevance > y->relevance;
          return x->item_id < y->item_id;
        });
        all_scores.emplace_back(accuracy_of(p, sel), sustainability_of(p, sel));
      }

  for (const auto& pt : frontier) {
    bool dominated = false;
    for (const auto& [acc, sus] : all_scores)
      if (acc >= pt.accuracy && sus >= pt.sustainability &&
          (acc > pt.accuracy || sus > pt.sustainability))
        dominated = true;
    INFO("list " << pt.list[0] << ";" << pt.list[1] << ";" << pt.list[2]);
    CHECK_FALSE(dominated);
  }

  for (std::size_t i = 1; i < frontier.size(); ++i) {
    CHECK(frontier[i].accuracy >= frontier[i - 1].accuracy);
    CHECK(frontier[i].sustainability <= frontier[i - 1].sustainability);
    if (frontier[i].accuracy > frontier[i - 1].accuracy)
      CHECK(frontier[i].sustainability < frontier[i - 1].sustainability);
  }
}

TEST_CASE("carbon and lci objectives scale against the pool maximum", "[rerank]") {
  RerankProblem p = problem({{"a", 1.0, false, 8.0, 2.0}, {"b", 0.5, false, 2.0, 6.0}},
                            1, SustainabilityObjective::kCarbon);
  auto [acc_a, sus_a] = score_list(p, {"a"});
  CHECK(sus_a == 1.0 - 8.0 / 8.0);
  auto [acc_b, sus_b] = score_list(p, {"b"});
  CHECK(sus_b == 1.0 - 2.0 / 8.0);
  CHECK(scalarized_rerank(p, 0.0) == std::vector<std::string>{"b"});
  CHECK(scalarized_rerank(p, 1.0) == std::vector<std::string>{"a"});

  RerankProblem q = problem({{"a", 1.0, false, 8.0, 2.0}, {"b", 0.5, false, 2.0, 6.0}},
                            1, SustainabilityObjective::kLci);
  auto [acc_qa, sus_qa] = score_list(q, {"a"});
  CHECK(sus_qa == 1.0 - 2.0 / 6.0);
}

TEST_CASE("green filter ranks greens first and tops up", "[rerank]") {
  Dataset ds = testutil::rerank_fixture();
  std::vector<RerankProblem> problems =
      build_problems(ds, 3, SustainabilityObjective::kGreenRate);
  REQUIRE(problems.size() == 1);
  GreenFilterResult r = green_filter_rerank(problems[0]);
  CHECK(r.list == std::vector<std::string>{"c", "d", "a"});
  CHECK(r.non_green_used == 1);

  RerankProblem two = problems[0];
  two.k = 2;
  GreenFilterResult just_greens = green_filter_rerank(two);
  CHECK(just_greens.list == std::vector<std::string>{"c", "d"});
  CHECK(just_greens.non_green_used == 0);

  RerankProblem four = problems[0];
  four.k = 4;
  GreenFilterResult all = green_filter_rerank(four);
  CHECK(all.list == std::vector<std::string>{"c", "d", "a", "b"});
  CHECK(all.non_green_used == 2);
}

TEST_CASE("build_problems fills unknown costs pessimistically", "[rerank]") {
  Dataset ds = testutil::tiny_dataset();
  ds.catalog[0].carbon_footprint = 5.0;   // x1
  ds.catalog[1].carbon_footprint.reset();  // x2
  ds.catalog[0].lci_score.reset();
  ds.catalog[1].lci_score = 3.0;
  ds.catalog[0].is_green.reset();
  ds.relevance_rows.push_back({"p1", "x1", 0.9});
  ds.relevance_rows.push_back({"p1", "x2", 0.4});
  ds.has_relevance_table = true;
  ds.finalize();

  std::vector<RerankProblem> problems =
      build_problems(ds, 2, SustainabilityObjective::kCarbon);
  REQUIRE(problems.size() == 1);
  const RerankProblem& p = problems[0];
  REQUIRE(p.pool.size() == 2);
  CHECK(p.pool[0].item_id == "x1");
  CHECK(p.pool[0].carbon == 5.0);
  CHECK(p.pool[1].carbon == 5.0);
  CHECK(p.pool[0].lci == 3.0);
  CHECK(p.pool[1].lci == 3.0);
  CHECK(p.pool[0].green == false);
  CHECK(p.max_carbon == 5.0);
  CHECK(p.idcg == 0.9 + 0.4 * disc(2));
}

TEST_CASE("objective names parse and reject unknowns", "[rerank]") {
  CHECK(parse_objective("green") == SustainabilityObjective::kGreenRate);
  CHECK(parse_objective("carbon") == SustainabilityObjective::kCarbon);
  CHECK(parse_objective("lci") == SustainabilityObjective::kLci);
  CHECK_THROWS_AS(parse_objective("speed"), std::invalid_argument);
}
