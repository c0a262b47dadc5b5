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

#ifndef SIZEMATCH_SELFTEST_HPP_
#define SIZEMATCH_SELFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sizematch/io.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

struct SelftestConfig {
  std::uint64_t seed = 1729;
  // Size limit for the enumeration oracles. 0 skips the suites that need
  // them.
  std::size_t cap = 8;
  std::size_t graphs = 200;
  std::size_t max_graph_vertices = 40;
  std::size_t stability_trials = 500;
  std::size_t matching_pairs = 300;
  std::size_t metric_triples = 300;
  std::size_t chain_pairs = 100;
  std::size_t chain_max_vertices = 8;
  std::size_t realization_pairs = 100;
  std::size_t realization_max_points = 5;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::size_t cases = 0;
  double seconds = 0;
  std::string detail;
  // Smallest failing instance found by shrinking; null when passed.
  Json counterexample;
};

// Suite names in report order.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SelftestConfig& config);

// Runs the named suites (all when empty), concurrently when `jobs` > 1.
// Results come back in suite_names() order regardless of scheduling.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config,
                                      const std::vector<std::string>& only = {},
                                      std::size_t jobs = 1);

// The five-vertex path with values 0, 2, 1, 3, 0.
SizePair path_fixture();

Json to_json(const SizePair& sp);

// Drops vertex v and its edges; empty if the rest is disconnected or empty.
std::optional<SizePair> remove_vertex(const SizePair& sp, VertexIndex v);

}  // namespace sizematch

#endif  // SIZEMATCH_SELFTEST_HPP_
