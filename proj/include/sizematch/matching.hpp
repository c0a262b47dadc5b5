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

#ifndef SIZEMATCH_MATCHING_HPP_
#define SIZEMATCH_MATCHING_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sizematch/diagram.hpp"
#include "sizematch/real.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

// min{ max(|x - x'|, |y - y'|), max((y - x) / 2, (y' - x') / 2) } with the
// usual conventions for infinite ordinates: two points at infinity are at
// distance |x - x'|, a point at infinity is infinitely far from everything
// else, and two diagonal points are at distance 0.
ExtendedReal pseudo_distance(const ExtendedPoint& p, const ExtendedPoint& q);

struct MatchPair {
  ExtendedPoint left;
  ExtendedPoint right;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// A bijection between the points of two diagrams, each padded with diagonal
// points. A proper point sent to the diagonal is paired with its
// projection ((x + y) / 2, (x + y) / 2).
struct Matching {
  std::vector<MatchPair> pairs;
  Real bottleneck_cost;

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchingResult {
  Real distance;
  Matching matching;
};

// Exact bottleneck distance between diagrams together with one optimal
// matching. Proper-to-proper pairs in the witness always satisfy
// max(|x - x'|, |y - y'|) <= distance.
MatchingResult matching_distance(const Diagram& d1, const Diagram& d2);

class SizeCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumerates every assignment of the proper points of d1 to proper points
// of d2 or to the diagonal. Throws SizeCapExceeded if either diagram has
// more than `cap` proper points counted with multiplicity.
Real brute_force_matching_distance(const Diagram& d1, const Diagram& d2,
                                   std::size_t cap = 8);

// Largest pseudo-distance over the pairs of a matching.
ExtendedReal matching_cost(const Matching& matching);

// Whether every proper point of d1 (resp. d2), counted with multiplicity,
// appears exactly once on the left (resp. right), and the points at
// infinity are paired with each other.
bool covers_diagrams(const Matching& matching, const Diagram& d1, const Diagram& d2);

struct StabilityProbe {
  Real distance;
  Real infinity_displacement;
  bool holds = false;
};

// Matching distance between the diagrams of (sp, values of sp) and
// (sp, perturbed), checked against eps. Throws std::invalid_argument if
// the perturbation has the wrong size or moves some value by more than eps.
StabilityProbe stability_probe(const SizePair& sp, std::span<const Real> perturbed,
                               const Real& eps);

}  // namespace sizematch

#endif  // SIZEMATCH_MATCHING_HPP_
