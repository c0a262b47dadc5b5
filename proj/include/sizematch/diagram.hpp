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

#ifndef SIZEMATCH_DIAGRAM_HPP_
#define SIZEMATCH_DIAGRAM_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sizematch/real.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

// A point of the closed extended half-plane: a proper point (x < y), a
// point at infinity (x, inf), or a point (t, t) of the diagonal. Diagonal
// points only occur inside matchings.
class ExtendedPoint {
 public:
  enum class Kind { kProper, kInfinity, kDiagonal };

  static ExtendedPoint proper(Real x, Real y);
  static ExtendedPoint at_infinity(Real x);
  static ExtendedPoint diagonal(Real t);

  Kind kind() const { return kind_; }
  bool is_proper() const { return kind_ == Kind::kProper; }
  bool is_infinite() const { return kind_ == Kind::kInfinity; }
  bool is_diagonal() const { return kind_ == Kind::kDiagonal; }

  const Real& x() const { return x_; }
  // Undefined for points at infinity.
  const Real& y() const { return y_; }

  // Max-norm distance to the diagonal, (y - x) / 2; zero on the diagonal.
  ExtendedReal diagonal_distance() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);

 private:
  ExtendedPoint(Kind kind, Real x, Real y) : kind_(kind), x_(std::move(x)), y_(std::move(y)) {}

  Kind kind_;
  Real x_;
  Real y_;
};

struct Cornerpoint {
  Real x;
  Real y;
  std::size_t multiplicity = 1;

  friend bool operator==(const Cornerpoint&, const Cornerpoint&) = default;
};

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One cornerpoint at infinity plus a finite multiset of proper
// cornerpoints. Points are kept sorted by (x, y) with equal points merged.
class Diagram {
 public:
  explicit Diagram(Real infinity_x, std::vector<Cornerpoint> points = {});

  const Real& infinity_x() const { return infinity_x_; }
  std::span<const Cornerpoint> points() const { return points_; }

  std::size_t total_multiplicity() const;
  // Proper points repeated according to multiplicity, in sorted order.
  std::vector<ExtendedPoint> expanded_points() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Real infinity_x_;
  std::vector<Cornerpoint> points_;
};

// Elder-rule sweep over vertices sorted by (value, index). A merge of two
// components at level d emits (birth of the younger, d); zero-persistence
// pairs are dropped.
Diagram extract_diagram(const SizePair& sp);

// Sum of multiplicities of cornerpoints (px, py), including the one at
// infinity, with px <= x and py > y. Throws OutsideHalfPlane unless x < y.
std::size_t evaluate_diagram(const Diagram& d, const Real& x, const Real& y);

// Four-term alternating sum of the reduced size function around (x, y) at a
// scale below every distinct gap among the vertex values and x, y. Brute
// force oracle for extract_diagram.
std::size_t multiplicity(const SizePair& sp, const Real& x, const Real& y);

// l(k + e, Y) - l(k - e, Y) for small e and Y above every value.
std::size_t multiplicity_at_infinity(const SizePair& sp, const Real& k);

// Total multiplicity of proper cornerpoints in the half-open square
// (cx - eta, cx + eta] x (cy - eta, cy + eta], from four evaluations of the
// reduced size function at the square's corners. Throws std::invalid_argument
// unless eta > 0 and cx + eta < cy - eta.
std::size_t count_in_square(const SizePair& sp, const Real& cx, const Real& cy,
                            const Real& eta);

}  // namespace sizematch

#endif  // SIZEMATCH_DIAGRAM_HPP_
