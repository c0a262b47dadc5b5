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

#include "sizematch/size_pair.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "union_find.hpp"

namespace sizematch {

DisconnectedGraph::DisconnectedGraph(std::size_t component_count)
    : InvalidSizePair("graph is not connected: " + std::to_string(component_count) +
                      " components"),
      component_count_(component_count) {}

namespace {

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

}  // namespace

SizePair::SizePair(std::vector<Real> values, std::vector<Edge> edges)
    : ids_(default_ids(values.size())), values_(std::move(values)), edges_(std::move(edges)) {
  validate_and_index();
}

SizePair::SizePair(std::vector<std::string> ids, std::vector<Real> values,
                   std::vector<Edge> edges)
    : ids_(std::move(ids)), values_(std::move(values)), edges_(std::move(edges)) {
  validate_and_index();
}

void SizePair::validate_and_index() {
  const std::size_t n = values_.size();
  if (n == 0) throw InvalidSizePair("size pair has no vertices");
  if (ids_.size() != n) throw InvalidSizePair("ids and values differ in length");
  {
    std::set<std::string> seen;
    for (const auto& id : ids_) {
      if (!seen.insert(id).second) throw InvalidSizePair("duplicate vertex id '" + id + "'");
    }
  }

  std::set<Edge> seen_edges;
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw InvalidSizePair("edge references a missing vertex");
    if (u == v) throw InvalidSizePair("self-loop at vertex '" + ids_[u] + "'");
    const Edge key = std::minmax(u, v);
    if (!seen_edges.insert(key).second) {
      throw InvalidSizePair("duplicate edge '" + ids_[u] + "'-'" + ids_[v] + "'");
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  adjacency_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  adjacency_.assign(adjacency_offsets_[n], 0);
  std::vector<std::size_t> fill(adjacency_offsets_.begin(), adjacency_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offsets_[v + 1]));
  }

  detail::UnionFind uf(n);
  for (const auto& [u, v] : edges_) uf.unite(u, v);
  if (uf.set_count() != 1) throw DisconnectedGraph(uf.set_count());

  levels_ = values_;
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  level_of_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    level_of_[v] = static_cast<std::size_t>(
        std::lower_bound(levels_.begin(), levels_.end(), values_[v]) - levels_.begin());
  }
}

std::span<const VertexIndex> SizePair::neighbors(VertexIndex v) const {
  return std::span<const VertexIndex>(adjacency_).subspan(
      adjacency_offsets_[v], adjacency_offsets_[v + 1] - adjacency_offsets_[v]);
}

std::size_t SizePair::count_levels_at_most(const Real& threshold) const {
  return static_cast<std::size_t>(
      std::upper_bound(levels_.begin(), levels_.end(), threshold) - levels_.begin());
}

SizePair SizePair::with_values(std::vector<Real> values) const {
  return SizePair(ids_, std::move(values), edges_);
}

namespace {

// Union-find over the sublevel set at the given level count.
detail::UnionFind sublevel_forest(const SizePair& sp, std::size_t level_count) {
  detail::UnionFind uf(sp.size());
  for (const auto& [u, v] : sp.edges()) {
    if (sp.level_of(u) < level_count && sp.level_of(v) < level_count) uf.unite(u, v);
  }
  return uf;
}

}  // namespace

SublevelPartition sublevel_components(const SizePair& sp, const Real& y) {
  const std::size_t levels = sp.count_levels_at_most(y);
  detail::UnionFind uf = sublevel_forest(sp, levels);
  std::vector<std::vector<VertexIndex>> by_root(sp.size());
  for (VertexIndex v = 0; v < sp.size(); ++v) {
    if (sp.level_of(v) < levels) by_root[uf.find(v)].push_back(v);
  }
  SublevelPartition out{y, {}};
  for (auto& component : by_root) {
    if (!component.empty()) out.components.push_back(std::move(component));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::size_t reduced_size_function(const SizePair& sp, const Real& x, const Real& y) {
  if (!(x < y)) {
    throw OutsideHalfPlane("reduced size function queried at x >= y (" + to_string(x) +
                           ", " + to_string(y) + ")");
  }
  const std::size_t lower = sp.count_levels_at_most(x);
  if (lower == 0) return 0;
  const std::size_t upper = sp.count_levels_at_most(y);
  detail::UnionFind uf = sublevel_forest(sp, upper);
  std::vector<char> touched(sp.size(), 0);
  std::size_t count = 0;
  for (VertexIndex v = 0; v < sp.size(); ++v) {
    if (sp.level_of(v) >= lower) continue;
    const std::size_t root = uf.find(v);
    if (!touched[root]) {
      touched[root] = 1;
      ++count;
    }
  }
  return count;
}

bool is_graph_isomorphism(const SizePair& sp1, const SizePair& sp2,
                          std::span<const VertexIndex> map) {
  if (sp1.size() != sp2.size() || map.size() != sp1.size()) return false;
  if (sp1.edges().size() != sp2.edges().size()) return false;
  std::vector<char> hit(sp2.size(), 0);
  for (VertexIndex target : map) {
    if (target >= sp2.size() || hit[target]) return false;
    hit[target] = 1;
  }
  for (const auto& [u, v] : sp1.edges()) {
    const auto nbrs = sp2.neighbors(map[u]);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), map[v])) return false;
  }
  return true;
}

bool shifted_inequality_check(const SizePair& sp1, const SizePair& sp2,
                              std::span<const VertexIndex> iso, const Real& h,
                              std::span<const QueryPoint> grid) {
  if (h < 0) throw std::invalid_argument("shift must be non-negative");
  if (!is_graph_isomorphism(sp1, sp2, iso)) {
    throw std::invalid_argument("vertex map is not a graph isomorphism");
  }
  for (VertexIndex v = 0; v < sp1.size(); ++v) {
    if (h < abs(sp1.value(v) - sp2.value(iso[v]))) {
      throw std::invalid_argument("vertex map moves values by more than the shift");
    }
  }
  for (const auto& q : grid) {
    const Real lo = q.x - h;
    const Real hi = q.y + h;
    if (reduced_size_function(sp1, lo, hi) > reduced_size_function(sp2, q.x, q.y)) {
      return false;
    }
  }
  return true;
}

}  // namespace sizematch
