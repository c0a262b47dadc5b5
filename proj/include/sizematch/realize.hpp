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

#ifndef SIZEMATCH_REALIZE_HPP_
#define SIZEMATCH_REALIZE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sizematch/diagram.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/real.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

// Piecewise-linear function of y along one vertical line x = const.
struct ColumnProfile {
  Real x;
  // Strictly increasing; first and last are the bottom and top of the
  // rectangle.
  std::vector<Real> ys;
  std::vector<Real> values;

  Real value_at(const Real& y) const;
};

// A scalar field on [0, 1] x [bottom, top], piecewise linear in y along
// each listed column and linear in x between consecutive columns.
class RectField {
 public:
  RectField(Real bottom, Real top, std::vector<ColumnProfile> columns);

  const Real& bottom() const { return bottom_; }
  const Real& top() const { return top_; }
  std::span<const ColumnProfile> columns() const { return columns_; }
  std::vector<Real> x_breaks() const;

  Real value_at(const Real& x, const Real& y) const;

  friend bool operator==(const RectField& a, const RectField& b);

 private:
  Real bottom_;
  Real top_;
  std::vector<ColumnProfile> columns_;
};

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One matched pair of the optimal matching. The pair with index i (from 1)
// occupies the columns x = 1/(3i+1), 1/(3i), 1/(3i-1). `lower` is the point
// of the diagram with the smaller abscissa at infinity.
struct RealizationSlot {
  std::optional<Cornerpoint> lower;
  std::optional<Cornerpoint> upper;
  // Ordinate of the pit or plateau, and its half-height.
  Real center;
  Real epsilon;
};

struct RealizationParams {
  Real top;        // S, above every ordinate of both diagrams
  Real min_lower;  // bottom of the rectangle
  Real min_upper;
  // True when the second input had the smaller abscissa at infinity and
  // therefore plays the lower role.
  bool swapped = false;
  std::vector<RealizationSlot> slots;
};

struct RealizeOptions {
  // Reject constructions whose pit half-height falls below this value.
  Real min_epsilon = Real(0);
};

struct Realization {
  RectField phi;  // realizes the first diagram
  RectField psi;  // realizes the second diagram
  RealizationParams params;
  Real distance;
  Matching matching;
};

// Builds two fields on a common rectangle whose reduced size functions are
// those of d1 and d2 and whose largest pointwise difference equals the
// matching distance. Every proper point needs x >= the diagram's abscissa
// at infinity; otherwise InvalidDiagram is thrown.
Realization realize(const Diagram& d1, const Diagram& d2, const RealizeOptions& options = {});

// Grid graph on the union of all column ordinates (each gap split into
// `refine` equal parts), 4-connected, valued by the field.
SizePair discretize(const RectField& field, std::size_t refine = 1);

// max |a - b| over the nodes of the joint grid. The fields must share
// their columns and rectangle.
Real max_node_gap(const RectField& a, const RectField& b);

struct RealizationCheck {
  Diagram phi_diagram;
  Diagram psi_diagram;
  bool phi_round_trip = false;
  bool psi_round_trip = false;
  Real max_gap;
  bool tight = false;
  bool refinement_stable = false;

  bool ok() const { return phi_round_trip && psi_round_trip && tight && refinement_stable; }
};

// Re-extracts both diagrams from the discretized fields at `refine` and
// 2 * refine and compares the node gap with the matching distance.
RealizationCheck verify_realization(const Diagram& d1, const Diagram& d2,
                                    const Realization& realization, std::size_t refine = 1);

}  // namespace sizematch

#endif  // SIZEMATCH_REALIZE_HPP_
