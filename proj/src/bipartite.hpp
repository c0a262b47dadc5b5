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

#ifndef SIZEMATCH_SRC_BIPARTITE_HPP_
#define SIZEMATCH_SRC_BIPARTITE_HPP_

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace sizematch::detail {

// Hopcroft-Karp maximum matching. Left vertices 0..left-1, right vertices
// 0..right-1. Adjacency lists are scanned in insertion order, so the result
// is deterministic for a given edge order.
class BipartiteMatcher {
 public:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  BipartiteMatcher(std::size_t left, std::size_t right)
      : adjacency_(left), match_left_(left, kFree), match_right_(right, kFree), level_(left) {}

  void add_edge(std::size_t u, std::size_t v) { adjacency_[u].push_back(v); }

  std::size_t solve() {
    std::size_t size = 0;
    while (layer()) {
      for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        if (match_left_[u] == kFree && augment(u)) ++size;
      }
    }
    return size;
  }

  // Right partner of u, or kFree.
  std::size_t partner_of_left(std::size_t u) const { return match_left_[u]; }
  std::size_t partner_of_right(std::size_t v) const { return match_right_[v]; }

 private:
  static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  bool layer() {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      if (match_left_[u] == kFree) {
        level_[u] = 0;
        queue.push(u);
      } else {
        level_[u] = kUnreached;
      }
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adjacency_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (level_[w] == kUnreached) {
          level_[w] = level_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool augment(std::size_t u) {
    for (std::size_t v : adjacency_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kFree || (level_[w] == level_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    level_[u] = kUnreached;
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> level_;
};

}  // namespace sizematch::detail

#endif  // SIZEMATCH_SRC_BIPARTITE_HPP_
