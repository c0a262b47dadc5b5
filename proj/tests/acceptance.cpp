/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// One line per acceptance criterion, run at full size with the default seed.

#include <cstdio>
#include <optional>
#include <string>

#include "sizematch/selftest.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* title;
  std::size_t expected_cases;
  std::optional<double> limit_seconds;
};

}  // namespace

int main() {
  using namespace sizematch;
  const SelftestConfig config;
  const Criterion criteria[] = {
      {1, "representation", "representation round-trip", config.graphs, 10.0},
      {2, "multiplicity", "multiplicity oracle", config.graphs, std::nullopt},
      {3, "stability", "matching stability", config.stability_trials, 30.0},
      {4, "matching-oracle", "optimal matching exactness", config.matching_pairs, 60.0},
      {5, "metric-axioms", "metric axioms", config.metric_triples, std::nullopt},
      {6, "bound-chain", "lower-bound chain", config.chain_pairs, 60.0},
      {7, "realization", "realization round-trip and tightness", config.realization_pairs, 120.0},
      {8, "path-fixture", "worked path fixture", 1, std::nullopt},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const SuiteResult r = run_suite(c.suite, config);
    std::string why;
    if (r.skipped) why = "skipped";
    else if (!r.passed) why = r.detail;
    else if (r.cases != c.expected_cases) why = "ran " + std::to_string(r.cases) + " cases";
    else if (c.limit_seconds && r.seconds > *c.limit_seconds) why = "over the time limit";

    std::string limit;
    if (c.limit_seconds) limit = ", limit " + std::to_string(static_cast<int>(*c.limit_seconds)) + " s";
    std::printf("criterion %d %s  %s: %zu cases in %.2f s%s%s%s\n", c.number,
                why.empty() ? "PASS" : "FAIL", c.title, r.cases, r.seconds, limit.c_str(),
                why.empty() ? "" : "; ", why.c_str());
    if (!why.empty()) {
      ++failures;
      if (!r.counterexample.is_null()) std::printf("  counterexample: %s\n", r.counterexample.dump().c_str());
    }
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
