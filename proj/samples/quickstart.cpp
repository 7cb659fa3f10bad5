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

// Generates a small synthetic dataset in memory, evaluates a handful of
// metrics, and sweeps the accuracy/sustainability trade-off for one user.

#include <cstdio>

#include "sustainrec/sustainrec.hpp"

int main() {
  sustainrec::SynthConfig cfg;
  cfg.seed = 42;
  cfg.n_users = 6;
  cfg.n_items = 20;
  sustainrec::Dataset ds = sustainrec::generate(cfg);

  sustainrec::EvalConfig eval_cfg;
  for (const char* name : {"avgcarfi", "girec", "parity", "listd", "labelcoverage"}) {
    sustainrec::MetricReport r = sustainrec::compute_metric(ds, eval_cfg, name);
    if (r.defined())
      std::printf("%-14s %s\n", name, sustainrec::format12(*r.value).c_str());
    else
      std::printf("%-14s undefined (%s)\n", name, r.undefined_reason.c_str());
  }

  auto problems = sustainrec::build_problems(
      ds, 3, sustainrec::SustainabilityObjective::kGreenRate);
  for (const auto& p : problems) {
    if (p.pool.size() < p.k) continue;
    std::printf("\ntrade-off frontier for %s (k=%zu):\n", p.user_id.c_str(), p.k);
    for (const auto& pt : sustainrec::pareto_frontier(p, sustainrec::uniform_grid(11))) {
      std::printf("  weight %.2f  accuracy %.4f  sustainability %.4f  [",
                  pt.weight, pt.accuracy, pt.sustainability);
      for (std::size_t i = 0; i < pt.list.size(); ++i)
        std::printf("%s%s", i ? " " : "", pt.list[i].c_str());
      std::printf("]\n");
    }
    break;  // one user is enough for a demo
  }
  return 0;
}
