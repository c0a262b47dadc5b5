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

#include "sizematch/realize.hpp"

#include <algorithm>

namespace sizematch {

Real ColumnProfile::value_at(const Real& y) const {
  if (y < ys.front() || ys.back() < y) {
    throw std::out_of_range("ordinate " + to_string(y) + " outside the column");
  }
  auto it = std::lower_bound(ys.begin(), ys.end(), y);
  const std::size_t k = static_cast<std::size_t>(it - ys.begin());
  if (*it == y) return values[k];
  const Real& y0 = ys[k - 1];
  const Real& y1 = ys[k];
  return values[k - 1] + (values[k] - values[k - 1]) * (y - y0) / (y1 - y0);
}

RectField::RectField(Real bottom, Real top, std::vector<ColumnProfile> columns)
    : bottom_(std::move(bottom)), top_(std::move(top)), columns_(std::move(columns)) {
  if (!(bottom_ < top_)) throw std::invalid_argument("rectangle has no height");
  if (columns_.size() < 2 || columns_.front().x != 0 || columns_.back().x != 1) {
    throw std::invalid_argument("columns must start at x = 0 and end at x = 1");
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (c > 0 && !(columns_[c - 1].x < col.x)) {
      throw std::invalid_argument("column abscissas must increase");
    }
    if (col.ys.size() < 2 || col.ys.size() != col.values.size()) {
      throw std::invalid_argument("column profile needs matching ordinates and values");
    }
    if (col.ys.front() != bottom_ || col.ys.back() != top_) {
      throw std::invalid_argument("column profile must span the rectangle");
    }
    for (std::size_t k = 1; k < col.ys.size(); ++k) {
      if (!(col.ys[k - 1] < col.ys[k])) {
        throw std::invalid_argument("column ordinates must increase");
      }
    }
  }
}

std::vector<Real> RectField::x_breaks() const {
  std::vector<Real> out;
  out.reserve(columns_.size());
  for (const auto& col : columns_) out.push_back(col.x);
  return out;
}

Real RectField::value_at(const Real& x, const Real& y) const {
  if (x < 0 || 1 < x) throw std::out_of_range("abscissa outside [0, 1]");
  auto it = std::lower_bound(columns_.begin(), columns_.end(), x,
                             [](const ColumnProfile& col, const Real& v) { return col.x < v; });
  if (it->x == x) return it->value_at(y);
  const ColumnProfile& right = *it;
  const ColumnProfile& left = *(it - 1);
  const Real a = left.value_at(y);
  const Real b = right.value_at(y);
  return a + (b - a) * (x - left.x) / (right.x - left.x);
}

bool operator==(const RectField& a, const RectField& b) {
  if (a.bottom_ != b.bottom_ || a.top_ != b.top_ || a.columns_.size() != b.columns_.size()) {
    return false;
  }
  for (std::size_t c = 0; c < a.columns_.size(); ++c) {
    const auto& p = a.columns_[c];
    const auto& q = b.columns_[c];
    if (p.x != q.x || p.ys != q.ys || p.values != q.values) return false;
  }
  return true;
}

namespace {

// Column profiles on [bottom, top]. `base` is the value at the bottom edge.
struct ProfileBuilder {
  Real bottom;
  Real top;
  Real base;

  // Rises to the rim, dips to the pit bottom at the center, rises back to
  // the rim, then to top.
  ColumnProfile pit(const Real& x, const RealizationSlot& s, const Cornerpoint& p) const {
    return {x,
            {bottom, s.center - s.epsilon, s.center, s.center + s.epsilon, top},
            {base, p.y, p.x, p.y, top}};
  }
  // Holds the rim height across the pit's ordinates.
  ColumnProfile flank(const Real& x, const RealizationSlot& s, const Cornerpoint& p) const {
    return {x, {bottom, s.center - s.epsilon, s.center + s.epsilon, top}, {base, p.y, p.y, top}};
  }
  // Flat at `level` across the pit's ordinates; requires base < level.
  ColumnProfile plateau(const Real& x, const RealizationSlot& s, const Real& level) const {
    return {x,
            {bottom, s.center - s.epsilon, s.center + s.epsilon, top},
            {base, level, level, top}};
  }
  // Flat at the base value up to the top of the pit's ordinates.
  ColumnProfile low_plateau(const Real& x, const RealizationSlot& s) const {
    return {x, {bottom, s.center + s.epsilon, top}, {base, base, top}};
  }
  ColumnProfile linear(const Real& x) const { return {x, {bottom, top}, {base, top}}; }
};

Real midpoint(const Cornerpoint& p) { return (p.x + p.y) / 2; }

void require_realizable(const Diagram& d, const char* name) {
  for (const auto& p : d.points()) {
    if (p.x < d.infinity_x()) {
      throw InvalidDiagram(std::string(name) + " has cornerpoint (" + to_string(p.x) + ", " +
                           to_string(p.y) +
                           ") left of its abscissa at infinity; no size pair realizes it");
    }
  }
}

Cornerpoint single(const ExtendedPoint& p) { return Cornerpoint{p.x(), p.y(), 1}; }

}  // namespace

Realization realize(const Diagram& d1, const Diagram& d2, const RealizeOptions& options) {
  require_realizable(d1, "first diagram");
  require_realizable(d2, "second diagram");

  const bool swapped = d2.infinity_x() < d1.infinity_x();
  const Diagram& lower = swapped ? d2 : d1;
  const Diagram& upper = swapped ? d1 : d2;

  MatchingResult matched = matching_distance(lower, upper);

  RealizationParams params;
  params.swapped = swapped;
  params.min_lower = lower.infinity_x();
  params.min_upper = upper.infinity_x();
  Real highest = params.min_upper;
  for (const auto* d : {&lower, &upper}) {
    for (const auto& p : d->points()) highest = max(highest, p.y);
  }
  params.top = highest + 1;

  for (const auto& pair : matched.matching.pairs) {
    if (pair.left.is_infinite()) continue;
    RealizationSlot slot;
    if (pair.left.is_proper()) slot.lower = single(pair.left);
    if (pair.right.is_proper()) slot.upper = single(pair.right);
    const Cornerpoint& anchor = slot.lower ? *slot.lower : *slot.upper;
    slot.center = midpoint(anchor);
    Real room = (anchor.y - anchor.x) / 4;
    room = min(room, Real(slot.center - params.min_lower));
    room = min(room, Real(params.top - slot.center));
    slot.epsilon = room / 2;
    if (!(slot.epsilon > 0) || slot.epsilon < options.min_epsilon) {
      throw RealizationError("pit half-height " + to_string(slot.epsilon) +
                             " below the configured minimum");
    }
    params.slots.push_back(std::move(slot));
  }

  const Real& bottom = params.min_lower;
  const ProfileBuilder lower_cols{bottom, params.top, params.min_lower};
  const ProfileBuilder upper_cols{bottom, params.top, params.min_upper};

  std::vector<ColumnProfile> phi_cols;
  std::vector<ColumnProfile> psi_cols;
  phi_cols.push_back(lower_cols.linear(Real(0)));
  psi_cols.push_back(upper_cols.linear(Real(0)));
  // Slots with larger index sit closer to x = 0.
  for (std::size_t k = params.slots.size(); k-- > 0;) {
    const RealizationSlot& s = params.slots[k];
    const long i = static_cast<long>(k) + 1;
    const Real xs[3] = {make_real(1, 3 * i + 1), make_real(1, 3 * i), make_real(1, 3 * i - 1)};
    for (int c = 0; c < 3; ++c) {
      const bool centre = c == 1;
      if (s.lower) {
        phi_cols.push_back(centre ? lower_cols.pit(xs[c], s, *s.lower)
                                  : lower_cols.flank(xs[c], s, *s.lower));
      } else {
        phi_cols.push_back(lower_cols.plateau(xs[c], s, midpoint(*s.upper)));
      }
      if (s.upper) {
        psi_cols.push_back(centre ? upper_cols.pit(xs[c], s, *s.upper)
                                  : upper_cols.flank(xs[c], s, *s.upper));
      } else if (params.min_upper < s.center) {
        psi_cols.push_back(upper_cols.plateau(xs[c], s, s.center));
      } else {
        psi_cols.push_back(upper_cols.low_plateau(xs[c], s));
      }
    }
  }
  phi_cols.push_back(lower_cols.linear(Real(1)));
  psi_cols.push_back(upper_cols.linear(Real(1)));

  RectField lower_field(bottom, params.top, std::move(phi_cols));
  RectField upper_field(bottom, params.top, std::move(psi_cols));
  if (swapped) {
    return Realization{std::move(upper_field), std::move(lower_field), std::move(params),
                       std::move(matched.distance), std::move(matched.matching)};
  }
  return Realization{std::move(lower_field), std::move(upper_field), std::move(params),
                     std::move(matched.distance), std::move(matched.matching)};
}

namespace {

std::vector<Real> joint_rows(std::initializer_list<const RectField*> fields, std::size_t refine) {
  if (refine < 1) throw std::invalid_argument("refine must be at least 1");
  std::vector<Real> breaks;
  for (const RectField* f : fields) {
    for (const auto& col : f->columns()) breaks.insert(breaks.end(), col.ys.begin(), col.ys.end());
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Real> rows;
  rows.reserve((breaks.size() - 1) * refine + 1);
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const Real step = (breaks[k + 1] - breaks[k]) / static_cast<long>(refine);
    for (std::size_t j = 0; j < refine; ++j) rows.push_back(breaks[k] + step * static_cast<long>(j));
  }
  rows.push_back(breaks.back());
  return rows;
}

}  // namespace

SizePair discretize(const RectField& field, std::size_t refine) {
  const std::vector<Real> rows = joint_rows({&field}, refine);
  const auto columns = field.columns();
  const std::size_t height = rows.size();
  std::vector<std::string> ids;
  std::vector<Real> values;
  std::vector<Edge> edges;
  ids.reserve(columns.size() * height);
  values.reserve(columns.size() * height);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < height; ++r) {
      ids.push_back("c" + std::to_string(c) + "r" + std::to_string(r));
      values.push_back(columns[c].value_at(rows[r]));
      const std::size_t v = c * height + r;
      if (r > 0) edges.emplace_back(v - 1, v);
      if (c > 0) edges.emplace_back(v - height, v);
    }
  }
  return SizePair(std::move(ids), std::move(values), std::move(edges));
}

Real max_node_gap(const RectField& a, const RectField& b) {
  if (a.bottom() != b.bottom() || a.top() != b.top() || a.x_breaks() != b.x_breaks()) {
    throw std::invalid_argument("fields do not share a grid");
  }
  const std::vector<Real> rows = joint_rows({&a, &b}, 1);
  Real gap(0);
  for (std::size_t c = 0; c < a.columns().size(); ++c) {
    for (const Real& y : rows) {
      gap = max(gap, abs(a.columns()[c].value_at(y) - b.columns()[c].value_at(y)));
    }
  }
  return gap;
}

RealizationCheck verify_realization(const Diagram& d1, const Diagram& d2,
                                    const Realization& realization, std::size_t refine) {
  RealizationCheck check{extract_diagram(discretize(realization.phi, refine)),
                         extract_diagram(discretize(realization.psi, refine)),
                         false, false, max_node_gap(realization.phi, realization.psi),
                         false, false};
  check.phi_round_trip = check.phi_diagram == d1;
  check.psi_round_trip = check.psi_diagram == d2;
  check.tight = check.max_gap == realization.distance;
  check.refinement_stable =
      extract_diagram(discretize(realization.phi, 2 * refine)) == check.phi_diagram &&
      extract_diagram(discretize(realization.psi, 2 * refine)) == check.psi_diagram;
  return check;
}

}  // namespace sizematch
