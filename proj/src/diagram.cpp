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

#include "sizematch/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "union_find.hpp"

namespace sizematch {

ExtendedPoint ExtendedPoint::proper(Real x, Real y) {
  if (!(x < y)) {
    throw InvalidDiagram("proper point needs x < y, got (" + to_string(x) + ", " +
                         to_string(y) + ")");
  }
  return ExtendedPoint(Kind::kProper, std::move(x), std::move(y));
}

ExtendedPoint ExtendedPoint::at_infinity(Real x) {
  return ExtendedPoint(Kind::kInfinity, std::move(x), Real(0));
}

ExtendedPoint ExtendedPoint::diagonal(Real t) {
  Real y = t;
  return ExtendedPoint(Kind::kDiagonal, std::move(t), std::move(y));
}

ExtendedReal ExtendedPoint::diagonal_distance() const {
  switch (kind_) {
    case Kind::kInfinity:
      return ExtendedReal::infinity();
    case Kind::kDiagonal:
      return ExtendedReal::finite(Real(0));
    case Kind::kProper:
      break;
  }
  return ExtendedReal::finite(Real((y_ - x_) / 2));
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == ExtendedPoint::Kind::kInfinity) return a.x_ == b.x_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

Diagram::Diagram(Real infinity_x, std::vector<Cornerpoint> points)
    : infinity_x_(std::move(infinity_x)) {
  for (const auto& p : points) {
    if (!(p.x < p.y)) {
      throw InvalidDiagram("cornerpoint (" + to_string(p.x) + ", " + to_string(p.y) +
                           ") is not above the diagonal");
    }
    if (p.multiplicity < 1) {
      throw InvalidDiagram("cornerpoint (" + to_string(p.x) + ", " + to_string(p.y) +
                           ") has multiplicity 0");
    }
  }
  std::sort(points.begin(), points.end(), [](const Cornerpoint& a, const Cornerpoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  for (auto& p : points) {
    if (!points_.empty() && points_.back().x == p.x && points_.back().y == p.y) {
      points_.back().multiplicity += p.multiplicity;
    } else {
      points_.push_back(std::move(p));
    }
  }
}

std::size_t Diagram::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& p : points_) total += p.multiplicity;
  return total;
}

std::vector<ExtendedPoint> Diagram::expanded_points() const {
  std::vector<ExtendedPoint> out;
  out.reserve(total_multiplicity());
  for (const auto& p : points_) {
    for (std::size_t k = 0; k < p.multiplicity; ++k) out.push_back(ExtendedPoint::proper(p.x, p.y));
  }
  return out;
}

Diagram extract_diagram(const SizePair& sp) {
  const std::size_t n = sp.size();
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return sp.level_of(a) < sp.level_of(b) || (sp.level_of(a) == sp.level_of(b) && a < b);
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  // Components are identified with the vertex where they were born; that
  // vertex's sweep rank orders them by age (value first, then index).
  detail::UnionFind uf(n);
  std::vector<VertexIndex> birth(n);
  std::iota(birth.begin(), birth.end(), VertexIndex{0});

  std::vector<Cornerpoint> pairs;
  for (VertexIndex v : order) {
    for (VertexIndex u : sp.neighbors(v)) {
      if (rank[u] > rank[v]) continue;
      const std::size_t ru = uf.find(u);
      const std::size_t rv = uf.find(v);
      if (ru == rv) continue;
      VertexIndex elder = birth[ru];
      VertexIndex younger = birth[rv];
      if (rank[younger] < rank[elder]) std::swap(elder, younger);
      if (sp.value(younger) < sp.value(v)) {
        pairs.push_back(Cornerpoint{sp.value(younger), sp.value(v), 1});
      }
      uf.unite(ru, rv);
      birth[uf.find(v)] = elder;
    }
  }
  return Diagram(sp.min_value(), std::move(pairs));
}

std::size_t evaluate_diagram(const Diagram& d, const Real& x, const Real& y) {
  if (!(x < y)) {
    throw OutsideHalfPlane("diagram evaluated at x >= y (" + to_string(x) + ", " +
                           to_string(y) + ")");
  }
  std::size_t total = d.infinity_x() <= x ? 1 : 0;
  for (const auto& p : d.points()) {
    if (p.x <= x && p.y > y) total += p.multiplicity;
  }
  return total;
}

namespace {

// Half of the smallest gap between distinct members of levels and extra.
Real half_min_gap(const std::vector<Real>& levels, std::initializer_list<Real> extra) {
  std::vector<Real> all(levels);
  all.insert(all.end(), extra.begin(), extra.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() < 2) return Real(1);
  Real gap = all[1] - all[0];
  for (std::size_t i = 2; i < all.size(); ++i) {
    const Real g = all[i] - all[i - 1];
    if (g < gap) gap = g;
  }
  return gap / 2;
}

}  // namespace

std::size_t multiplicity(const SizePair& sp, const Real& x, const Real& y) {
  if (!(x < y)) {
    throw OutsideHalfPlane("multiplicity queried at x >= y (" + to_string(x) + ", " +
                           to_string(y) + ")");
  }
  Real eps = half_min_gap(sp.levels(), {x, y});
  const Real quarter_width = (y - x) / 4;
  if (quarter_width < eps) eps = quarter_width;
  const Real xl = x - eps;
  const Real xr = x + eps;
  const Real yl = y - eps;
  const Real yr = y + eps;
  const long value = static_cast<long>(reduced_size_function(sp, xr, yl)) -
                     static_cast<long>(reduced_size_function(sp, xl, yl)) -
                     static_cast<long>(reduced_size_function(sp, xr, yr)) +
                     static_cast<long>(reduced_size_function(sp, xl, yr));
  if (value < 0) throw std::logic_error("negative cornerpoint count");
  return static_cast<std::size_t>(value);
}

std::size_t multiplicity_at_infinity(const SizePair& sp, const Real& k) {
  const Real eps = half_min_gap(sp.levels(), {k});
  const Real kl = k - eps;
  const Real kr = k + eps;
  const Real top = max(sp.max_value(), kr) + 1;
  return reduced_size_function(sp, kr, top) - reduced_size_function(sp, kl, top);
}

std::size_t count_in_square(const SizePair& sp, const Real& cx, const Real& cy,
                            const Real& eta) {
  if (!(eta > 0)) throw std::invalid_argument("square half-side must be positive");
  const Real left = cx - eta;
  const Real right = cx + eta;
  const Real bottom = cy - eta;
  const Real top = cy + eta;
  if (!(right < bottom)) {
    throw std::invalid_argument("square is not contained in the half-plane x < y");
  }
  const long value = static_cast<long>(reduced_size_function(sp, right, bottom)) -
                     static_cast<long>(reduced_size_function(sp, left, bottom)) -
                     static_cast<long>(reduced_size_function(sp, right, top)) +
                     static_cast<long>(reduced_size_function(sp, left, top));
  if (value < 0) throw std::logic_error("negative cornerpoint count");
  return static_cast<std::size_t>(value);
}

}  // namespace sizematch
