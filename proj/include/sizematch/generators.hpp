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

#ifndef SIZEMATCH_GENERATORS_HPP_
#define SIZEMATCH_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sizematch/diagram.hpp"
#include "sizematch/real.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

using Rng = std::mt19937_64;

// Values are multiples of 1/denominator in [0, range]. A small range
// produces many ties.
struct ValueSpec {
  long range = 10;
  long denominator = 4;
};

// Random spanning tree plus extra edges, each present with probability
// `extra_edge_probability`.
SizePair random_connected_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices,
                                const ValueSpec& values = {}, double extra_edge_probability = 0.15);

std::vector<Real> random_values(Rng& rng, std::size_t count, const ValueSpec& values = {});

// Every proper point has infinity_x <= x < y, coordinates on the
// 1/denominator lattice. Total multiplicity at most `max_points`.
Diagram random_diagram(Rng& rng, std::size_t max_points, const ValueSpec& values = {},
                       std::size_t max_multiplicity = 2);

// Rational in (0, 1).
Real random_epsilon(Rng& rng);

// values[v] + delta with |delta| <= eps, delta a multiple of eps / 8.
std::vector<Real> perturb(Rng& rng, const std::vector<Real>& values, const Real& eps);

// A graph and a relabelled copy of it. The copy carries either a
// perturbation of the first graph's values or fresh values.
struct IsomorphicPair {
  SizePair first;
  SizePair second;
  // permutation[v] is the vertex of `second` that is the copy of v.
  std::vector<VertexIndex> permutation;
};
IsomorphicPair random_isomorphic_pair(Rng& rng, std::size_t max_vertices,
                                      const ValueSpec& values = {});

// Relabels sp by `permutation` and assigns `values` (indexed by the new
// labels).
SizePair relabel(const SizePair& sp, const std::vector<VertexIndex>& permutation,
                 std::vector<Real> values);

}  // namespace sizematch

#endif  // SIZEMATCH_GENERATORS_HPP_
