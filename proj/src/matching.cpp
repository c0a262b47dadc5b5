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

#include "sizematch/matching.hpp"

#include <algorithm>
#include <functional>

#include "bipartite.hpp"

namespace sizematch {

namespace {

Real max_norm(const ExtendedPoint& p, const ExtendedPoint& q) {
  return max(abs(p.x() - q.x()), abs(p.y() - q.y()));
}

Real half_gap(const ExtendedPoint& p) { return (p.y() - p.x()) / 2; }

ExtendedPoint projection(const ExtendedPoint& p) {
  return ExtendedPoint::diagonal((p.x() + p.y()) / 2);
}

}  // namespace

ExtendedReal pseudo_distance(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p.is_infinite() || q.is_infinite()) {
    if (p.is_infinite() && q.is_infinite()) return ExtendedReal::finite(abs(p.x() - q.x()));
    return ExtendedReal::infinity();
  }
  Real direct = max_norm(p, q);
  const Real via_diagonal = max(half_gap(p), half_gap(q));
  if (via_diagonal < direct) direct = via_diagonal;
  return ExtendedReal::finite(std::move(direct));
}

namespace {

// Augmented bipartite graph at threshold t. Left side: the n points of d1
// followed by m diagonal slots, one per point of d2. Right side: the m
// points of d2 followed by n diagonal slots, one per point of d1.
detail::BipartiteMatcher threshold_graph(const std::vector<ExtendedPoint>& left,
                                         const std::vector<ExtendedPoint>& right,
                                         const Real& t) {
  const std::size_t n = left.size();
  const std::size_t m = right.size();
  detail::BipartiteMatcher matcher(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (max_norm(left[i], right[j]) <= t) matcher.add_edge(i, j);
    }
    if (half_gap(left[i]) <= t) matcher.add_edge(i, m + i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (half_gap(right[j]) <= t) matcher.add_edge(n + j, j);
    for (std::size_t i = 0; i < n; ++i) matcher.add_edge(n + j, m + i);
  }
  return matcher;
}

}  // namespace

MatchingResult matching_distance(const Diagram& d1, const Diagram& d2) {
  const std::vector<ExtendedPoint> left = d1.expanded_points();
  const std::vector<ExtendedPoint> right = d2.expanded_points();
  const std::size_t n = left.size();
  const std::size_t m = right.size();

  // The bottleneck is one of these values.
  std::vector<Real> candidates{Real(0)};
  candidates.reserve(n * m + n + m + 1);
  for (const auto& p : left) {
    candidates.push_back(half_gap(p));
    for (const auto& q : right) candidates.push_back(max_norm(p, q));
  }
  for (const auto& q : right) candidates.push_back(half_gap(q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // sending everything to the diagonal is feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto matcher = threshold_graph(left, right, candidates[mid]);
    if (matcher.solve() == n + m) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Real& bottleneck = candidates[lo];
  auto matcher = threshold_graph(left, right, bottleneck);
  matcher.solve();

  const Real infinity_gap = abs(d1.infinity_x() - d2.infinity_x());
  MatchingResult result{max(bottleneck, infinity_gap), {}};
  Matching& witness = result.matching;
  witness.pairs.push_back(
      {ExtendedPoint::at_infinity(d1.infinity_x()), ExtendedPoint::at_infinity(d2.infinity_x())});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = matcher.partner_of_left(i);
    if (j < m) {
      witness.pairs.push_back({left[i], right[j]});
    } else {
      witness.pairs.push_back({left[i], projection(left[i])});
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (matcher.partner_of_right(j) >= n) {
      witness.pairs.push_back({projection(right[j]), right[j]});
    }
  }
  witness.bottleneck_cost = result.distance;
  return result;
}

Real brute_force_matching_distance(const Diagram& d1, const Diagram& d2, std::size_t cap) {
  const std::vector<ExtendedPoint> left = d1.expanded_points();
  const std::vector<ExtendedPoint> right = d2.expanded_points();
  if (left.size() > cap || right.size() > cap) {
    throw SizeCapExceeded("brute-force matching limited to " + std::to_string(cap) +
                          " points per diagram");
  }
  const std::size_t n = left.size();
  const std::size_t m = right.size();

  // Costs are replaced by their ranks so the enumeration runs on integers.
  std::vector<Real> values;
  std::vector<std::vector<Real>> pair_cost(n, std::vector<Real>(m));
  std::vector<Real> left_diag(n);
  std::vector<Real> right_diag(m);
  for (std::size_t i = 0; i < n; ++i) {
    left_diag[i] = pseudo_distance(left[i], projection(left[i])).value;
    values.push_back(left_diag[i]);
    for (std::size_t j = 0; j < m; ++j) {
      pair_cost[i][j] = pseudo_distance(left[i], right[j]).value;
      values.push_back(pair_cost[i][j]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    right_diag[j] = pseudo_distance(projection(right[j]), right[j]).value;
    values.push_back(right_diag[j]);
  }
  values.push_back(Real(0));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto rank = [&](const Real& v) {
    return static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };
  std::vector<std::vector<int>> pair_rank(n, std::vector<int>(m));
  std::vector<int> left_rank(n);
  std::vector<int> right_rank(m);
  for (std::size_t i = 0; i < n; ++i) {
    left_rank[i] = rank(left_diag[i]);
    for (std::size_t j = 0; j < m; ++j) pair_rank[i][j] = rank(pair_cost[i][j]);
  }
  for (std::size_t j = 0; j < m; ++j) right_rank[j] = rank(right_diag[j]);

  int best = std::numeric_limits<int>::max();
  std::vector<char> used(m, 0);
  std::function<void(std::size_t, int)> search = [&](std::size_t i, int current) {
    if (current >= best) return;
    if (i == n) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!used[j]) current = std::max(current, right_rank[j]);
      }
      best = std::min(best, current);
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      search(i + 1, std::max(current, pair_rank[i][j]));
      used[j] = 0;
    }
    search(i + 1, std::max(current, left_rank[i]));
  };
  search(0, 0);
  return max(values[static_cast<std::size_t>(best)], abs(d1.infinity_x() - d2.infinity_x()));
}

ExtendedReal matching_cost(const Matching& matching) {
  ExtendedReal worst = ExtendedReal::finite(Real(0));
  for (const auto& pair : matching.pairs) {
    const ExtendedReal c = pseudo_distance(pair.left, pair.right);
    if (worst < c) worst = c;
  }
  return worst;
}

bool covers_diagrams(const Matching& matching, const Diagram& d1, const Diagram& d2) {
  std::vector<ExtendedPoint> left;
  std::vector<ExtendedPoint> right;
  std::size_t infinity_pairs = 0;
  for (const auto& pair : matching.pairs) {
    if (pair.left.is_infinite() || pair.right.is_infinite()) {
      if (!(pair.left == ExtendedPoint::at_infinity(d1.infinity_x()) &&
            pair.right == ExtendedPoint::at_infinity(d2.infinity_x()))) {
        return false;
      }
      ++infinity_pairs;
      continue;
    }
    if (pair.left.is_proper()) left.push_back(pair.left);
    if (pair.right.is_proper()) right.push_back(pair.right);
  }
  auto order = [](const ExtendedPoint& a, const ExtendedPoint& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  };
  std::sort(left.begin(), left.end(), order);
  std::sort(right.begin(), right.end(), order);
  return infinity_pairs == 1 && left == d1.expanded_points() && right == d2.expanded_points();
}

StabilityProbe stability_probe(const SizePair& sp, std::span<const Real> perturbed,
                               const Real& eps) {
  if (perturbed.size() != sp.size()) {
    throw std::invalid_argument("perturbed values do not match the vertex count");
  }
  for (std::size_t v = 0; v < sp.size(); ++v) {
    if (eps < abs(sp.value(v) - perturbed[v])) {
      throw std::invalid_argument("perturbation exceeds eps at vertex '" + sp.ids()[v] + "'");
    }
  }
  const SizePair moved = sp.with_values(std::vector<Real>(perturbed.begin(), perturbed.end()));
  const Diagram before = extract_diagram(sp);
  const Diagram after = extract_diagram(moved);
  StabilityProbe probe;
  probe.distance = matching_distance(before, after).distance;
  probe.infinity_displacement = abs(before.infinity_x() - after.infinity_x());
  probe.holds = probe.distance <= eps && probe.infinity_displacement <= eps;
  return probe;
}

}  // namespace sizematch
