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

#ifndef SIZEMATCH_BOUNDS_HPP_
#define SIZEMATCH_BOUNDS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sizematch/diagram.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/real.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

// The pair ((x, y), (xi, eta)) realizing the jump bound, as a limit point:
// the supremum is usually approached from inside a cell whose boundary
// contains the witness.
struct JumpWitness {
  Real x;
  Real y;
  Real xi;
  Real eta;
};

struct EarlierBound {
  Real value;
  // Empty when no pair (x, y), (xi, eta) with xi >= x, eta <= y and
  // l1(x, y) > l2(xi, eta) exists; value is then 0.
  std::optional<JumpWitness> witness;
};

// sup of min{xi - x, y - eta} over pairs of points of the open half-plane
// with xi >= x, eta <= y and l1(x, y) > l2(xi, eta), where l1 and l2 are the
// reduced size functions represented by the diagrams. Both functions are
// constant on the cells cut out by the cornerpoint coordinates; the
// supremum over each pair of cells is computed in closed form.
EarlierBound earlier_bound(const Diagram& d1, const Diagram& d2);

class NotIsomorphic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IsomorphismDistance {
  Real value;
  // map[v] is the image in the second graph of vertex v of the first.
  std::vector<VertexIndex> map;
};

// min over graph isomorphisms h of max_v |phi1(v) - phi2(h(v))|, by
// branch-and-bound enumeration. Throws SizeCapExceeded above `cap` vertices
// and NotIsomorphic when no isomorphism exists.
IsomorphismDistance best_isomorphism(const SizePair& sp1, const SizePair& sp2,
                                     std::size_t cap = 9);
Real exact_graph_pseudo_distance(const SizePair& sp1, const SizePair& sp2,
                                 std::size_t cap = 9);

class ChainViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BoundReport {
  Real d_match;
  Matching matching;
  EarlierBound earlier;
  std::optional<Real> exact_pseudo_distance;
  // Why the exact value is missing, if it is.
  std::string exact_skipped_reason;

  bool chain_holds() const;
};

// Assembles earlier_bound <= d_match <= exact pseudo-distance. The exact
// value is attempted only for isomorphic graphs within `cap` vertices.
// Throws ChainViolation if the chain fails.
BoundReport bound_report(const SizePair& sp1, const SizePair& sp2, std::size_t cap = 9);

}  // namespace sizematch

#endif  // SIZEMATCH_BOUNDS_HPP_
