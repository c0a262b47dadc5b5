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

#include "sizematch/generators.hpp"

#include <algorithm>
#include <numeric>

namespace sizematch {

namespace {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Real lattice_value(Rng& rng, const ValueSpec& spec) {
  return make_real(uniform(rng, 0, spec.range * spec.denominator), spec.denominator);
}

}  // namespace

std::vector<Real> random_values(Rng& rng, std::size_t count, const ValueSpec& values) {
  std::vector<Real> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(lattice_value(rng, values));
  return out;
}

SizePair random_connected_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices,
                                const ValueSpec& values, double extra_edge_probability) {
  const std::size_t n = static_cast<std::size_t>(
      uniform(rng, static_cast<long>(min_vertices), static_cast<long>(max_vertices)));
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (VertexIndex v = 1; v < n; ++v) {
    const auto u = static_cast<VertexIndex>(uniform(rng, 0, static_cast<long>(v) - 1));
    edges.emplace_back(u, v);
    present[u][v] = present[v][u] = 1;
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      if (!present[u][v] && extra(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<Real> vals = random_values(rng, n, values);
  return SizePair(std::move(vals), std::move(edges));
}

Diagram random_diagram(Rng& rng, std::size_t max_points, const ValueSpec& values,
                       std::size_t max_multiplicity) {
  const Real infinity_x = lattice_value(rng, values);
  const long d = values.denominator;
  const long total = uniform(rng, 0, static_cast<long>(max_points));
  std::vector<Cornerpoint> points;
  long used = 0;
  while (used < total) {
    const long room = std::min<long>(static_cast<long>(max_multiplicity), total - used);
    const long mult = uniform(rng, 1, room);
    const Real x = infinity_x + make_real(uniform(rng, 0, values.range * d), d);
    const Real y = x + make_real(uniform(rng, 1, values.range * d), d);
    points.push_back({x, y, static_cast<std::size_t>(mult)});
    used += mult;
  }
  return Diagram(infinity_x, std::move(points));
}

Real random_epsilon(Rng& rng) { return make_real(uniform(rng, 1, 63), 64); }

std::vector<Real> perturb(Rng& rng, const std::vector<Real>& values, const Real& eps) {
  std::vector<Real> out;
  out.reserve(values.size());
  for (const Real& v : values) out.push_back(v + eps * make_real(uniform(rng, -8, 8), 8));
  return out;
}

SizePair relabel(const SizePair& sp, const std::vector<VertexIndex>& permutation,
                 std::vector<Real> values) {
  std::vector<Edge> edges;
  edges.reserve(sp.edges().size());
  for (const auto& [u, v] : sp.edges()) edges.emplace_back(permutation[u], permutation[v]);
  return SizePair(std::move(values), std::move(edges));
}

IsomorphicPair random_isomorphic_pair(Rng& rng, std::size_t max_vertices, const ValueSpec& values) {
  SizePair first = random_connected_graph(rng, 1, max_vertices, values, 0.25);
  const std::size_t n = first.size();
  std::vector<VertexIndex> permutation(n);
  std::iota(permutation.begin(), permutation.end(), VertexIndex{0});
  std::shuffle(permutation.begin(), permutation.end(), rng);

  std::vector<Real> source;
  if (std::bernoulli_distribution(0.5)(rng)) {
    source = perturb(rng, first.values(), random_epsilon(rng) * 2);
  } else {
    source = random_values(rng, n, values);
  }
  std::vector<Real> second_values(n);
  for (VertexIndex v = 0; v < n; ++v) second_values[permutation[v]] = source[v];
  SizePair second = relabel(first, permutation, std::move(second_values));
  return IsomorphicPair{std::move(first), std::move(second), std::move(permutation)};
}

}  // namespace sizematch
