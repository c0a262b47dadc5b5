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

#ifndef SIZEMATCH_SIZE_PAIR_HPP_
#define SIZEMATCH_SIZE_PAIR_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sizematch/real.hpp"

namespace sizematch {

using VertexIndex = std::size_t;
using Edge = std::pair<VertexIndex, VertexIndex>;

class InvalidSizePair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public InvalidSizePair {
 public:
  explicit DisconnectedGraph(std::size_t component_count);
  std::size_t component_count() const { return component_count_; }

 private:
  std::size_t component_count_;
};

// A query outside the open half-plane {x < y}.
class OutsideHalfPlane : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A finite connected graph whose vertices carry the values of a measuring
// function. A vertex belongs to the sublevel set at y when its value is
// <= y; an edge belongs to it when both endpoints do.
class SizePair {
 public:
  // Vertex ids default to "v0", "v1", ...
  SizePair(std::vector<Real> values, std::vector<Edge> edges);
  SizePair(std::vector<std::string> ids, std::vector<Real> values,
           std::vector<Edge> edges);

  std::size_t size() const { return values_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Real>& values() const { return values_; }
  const Real& value(VertexIndex v) const { return values_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexIndex> neighbors(VertexIndex v) const;

  const Real& min_value() const { return levels_.front(); }
  const Real& max_value() const { return levels_.back(); }

  // Sorted distinct values.
  const std::vector<Real>& levels() const { return levels_; }
  // Position of each vertex value in levels().
  std::size_t level_of(VertexIndex v) const { return level_of_[v]; }
  // Number of levels <= threshold; vertex v is in the sublevel set at
  // `threshold` iff level_of(v) < count_levels_at_most(threshold).
  std::size_t count_levels_at_most(const Real& threshold) const;

  // Same graph, new values. Ids and edges are shared by value.
  SizePair with_values(std::vector<Real> values) const;

 private:
  void validate_and_index();

  std::vector<std::string> ids_;
  std::vector<Real> values_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<VertexIndex> adjacency_;
  std::vector<Real> levels_;
  std::vector<std::size_t> level_of_;
};

struct SublevelPartition {
  Real threshold;
  // Each component sorted by vertex index; components sorted by their
  // smallest vertex.
  std::vector<std::vector<VertexIndex>> components;
};

SublevelPartition sublevel_components(const SizePair& sp, const Real& y);

// Number of components of the sublevel set at y that meet the sublevel set
// at x. Throws OutsideHalfPlane unless x < y.
std::size_t reduced_size_function(const SizePair& sp, const Real& x,
                                  const Real& y);

struct QueryPoint {
  Real x;
  Real y;
};

// Checks l1(x - h, y + h) <= l2(x, y) on every grid point, where
// `iso[v]` is the image in sp2 of vertex v of sp1. Throws
// std::invalid_argument if `iso` is not a graph isomorphism or moves values
// by more than h, and OutsideHalfPlane for grid points with x >= y.
bool shifted_inequality_check(const SizePair& sp1, const SizePair& sp2,
                              std::span<const VertexIndex> iso, const Real& h,
                              std::span<const QueryPoint> grid);

// Whether `map` is a bijection between the vertex sets that maps edges onto
// edges.
bool is_graph_isomorphism(const SizePair& sp1, const SizePair& sp2,
                          std::span<const VertexIndex> map);

}  // namespace sizematch

#endif  // SIZEMATCH_SIZE_PAIR_HPP_
