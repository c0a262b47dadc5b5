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

// Reference computations used only by the tests. They share no code with
// the library beyond the data types.

#ifndef SIZEMATCH_TESTS_ORACLES_HPP_
#define SIZEMATCH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <queue>
#include <vector>

#include "sizematch/diagram.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch::oracle {

// Components of the sublevel set at y that meet the one at x, by
// breadth-first search from scratch.
inline std::size_t reduced_size(const SizePair& sp, const Real& x, const Real& y) {
  std::vector<char> seen(sp.size(), 0);
  std::size_t count = 0;
  for (VertexIndex s = 0; s < sp.size(); ++s) {
    if (seen[s] || sp.value(s) > y) continue;
    bool touches = false;
    std::queue<VertexIndex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const VertexIndex v = q.front();
      q.pop();
      touches = touches || sp.value(v) <= x;
      for (VertexIndex u : sp.neighbors(v)) {
        if (!seen[u] && sp.value(u) <= y) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    if (touches) ++count;
  }
  return count;
}

// Diagram from the four-term count at every pair of critical values, with
// a step below a quarter of the smallest gap.
inline Diagram four_term_diagram(const SizePair& sp) {
  std::vector<Real> c = sp.values();
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  Real e(1, 8);
  for (std::size_t i = 1; i < c.size(); ++i) e = std::min(e, Real((c[i] - c[i - 1]) / 8));
  std::vector<Cornerpoint> points;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Real& x = c[i];
      const Real& y = c[j];
      const long m = static_cast<long>(reduced_size(sp, x + e, y - e)) -
                     static_cast<long>(reduced_size(sp, x - e, y - e)) -
                     static_cast<long>(reduced_size(sp, x + e, y + e)) +
                     static_cast<long>(reduced_size(sp, x - e, y + e));
      if (m < 0) throw std::logic_error("negative four-term count");
      if (m > 0) points.push_back({x, y, static_cast<std::size_t>(m)});
    }
  }
  return Diagram(c.front(), std::move(points));
}

// Value of the function a diagram represents, counted directly.
inline std::size_t count_up_left(const Diagram& d, const Real& x, const Real& y) {
  std::size_t total = d.infinity_x() <= x ? 1 : 0;
  for (const auto& p : d.points()) {
    if (p.x <= x && p.y > y) total += p.multiplicity;
  }
  return total;
}

// sup of min{xi - x, y - eta} over lattice points with step `step` in
// [lo, hi], x <= xi < eta <= y, x < y, and l1(x, y) > l2(xi, eta).
inline Real grid_earlier_bound(const Diagram& d1, const Diagram& d2, const Real& lo,
                               const Real& hi, const Real& step) {
  std::vector<Real> g;
  for (Real t = lo; t <= hi; t += step) g.push_back(t);
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> l1(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::size_t>> l2 = l1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      l1[i][j] = count_up_left(d1, g[i], g[j]);
      l2[i][j] = count_up_left(d2, g[i], g[j]);
    }
  }
  Real best(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t first = l1[i][j];
      if (first == 0) continue;
      for (std::size_t a = i; a < j; ++a) {
        const Real left = g[a] - g[i];
        if (left <= best) continue;
        // l2 grows as eta drops, so stop at the first eta where it catches up.
        for (std::size_t b = j; b > a; --b) {
          if (l2[a][b] >= first) break;
          best = std::max(best, std::min(left, Real(g[j] - g[b])));
        }
      }
    }
  }
  return best;
}

}  // namespace sizematch::oracle

#endif  // SIZEMATCH_TESTS_ORACLES_HPP_
