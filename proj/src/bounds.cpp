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

#include "sizematch/bounds.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace sizematch {

namespace {

// Half-open interval [lo, hi) of the real line; lo may be -inf and hi +inf.
struct Cell {
  std::optional<Real> lo;
  std::optional<Real> hi;
};

std::vector<Cell> cells_of(std::vector<Real> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Cell> cells;
  cells.push_back({std::nullopt, breaks.empty() ? std::nullopt : std::optional<Real>(breaks[0])});
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    cells.push_back({breaks[i], i + 1 < breaks.size() ? std::optional<Real>(breaks[i + 1])
                                                       : std::nullopt});
  }
  return cells;
}

// Value of the reduced size function on the product of an x-cell and a
// y-cell (ignoring the constraint x < y).
std::size_t cell_value(const Diagram& d, const Cell& xs, const Cell& ys) {
  if (!xs.lo) return 0;
  const Real& x = *xs.lo;
  std::size_t total = d.infinity_x() <= x ? 1 : 0;
  // The unbounded y-cell lies above every ordinate.
  if (!ys.hi) return total;
  for (const auto& p : d.points()) {
    if (p.x <= x && p.y >= *ys.hi) total += p.multiplicity;
  }
  return total;
}

std::vector<Real> abscissas(const Diagram& d) {
  std::vector<Real> out{d.infinity_x()};
  for (const auto& p : d.points()) out.push_back(p.x);
  return out;
}

std::vector<Real> ordinates(const Diagram& d) {
  std::vector<Real> out;
  for (const auto& p : d.points()) out.push_back(p.y);
  return out;
}

bool less_than(const Real& a, const std::optional<Real>& upper) { return !upper || a < *upper; }

struct CellPairSup {
  Real value;
  JumpWitness witness;
};

// Supremum of min{xi - x, y - eta} with x = x_lo, y -> y_hi, xi in the
// xi-cell, eta in the eta-cell, x <= xi < eta <= y. Empty if no such
// configuration exists.
std::optional<CellPairSup> cell_pair_sup(const Real& x, const std::optional<Real>& y_hi,
                                         const Cell& xi_cell, const Cell& eta_cell) {
  const Real xi_min = xi_cell.lo ? max(*xi_cell.lo, x) : x;
  std::optional<Real> upper = eta_cell.hi;
  if (y_hi && (!upper || *y_hi < *upper)) upper = y_hi;

  if (!less_than(xi_min, xi_cell.hi)) return std::nullopt;
  if (eta_cell.lo && !less_than(*eta_cell.lo, upper)) return std::nullopt;
  if (!less_than(xi_min, upper)) return std::nullopt;

  const Real eta_min = eta_cell.lo ? max(*eta_cell.lo, xi_min) : xi_min;
  auto objective = [&](const Real& xi, const Real& eta) -> Real {
    return y_hi ? min(Real(xi - x), Real(*y_hi - eta)) : Real(xi - x);
  };

  CellPairSup out;
  if (xi_cell.hi && !(eta_min < *xi_cell.hi)) {
    // xi can reach the top of its cell without crossing eta.
    out.value = objective(*xi_cell.hi, eta_min);
    out.witness = {x, Real(0), *xi_cell.hi, eta_min};
  } else {
    // xi = eta = t on [eta_min, min(upper, xi_hi)]; concave in t.
    std::optional<Real> t_max = upper;
    if (xi_cell.hi && (!t_max || *xi_cell.hi < *t_max)) t_max = xi_cell.hi;
    if (!t_max) throw std::logic_error("unbounded jump bound");
    Real t = y_hi ? Real((x + *y_hi) / 2) : *t_max;
    if (t < eta_min) t = eta_min;
    if (*t_max < t) t = *t_max;
    out.value = objective(t, t);
    out.witness = {x, Real(0), t, t};
  }
  out.witness.y = y_hi ? *y_hi : Real(out.witness.eta + out.value);
  return out;
}

}  // namespace

EarlierBound earlier_bound(const Diagram& d1, const Diagram& d2) {
  const std::vector<Cell> x_cells = cells_of(abscissas(d1));
  const std::vector<Cell> y_cells = cells_of(ordinates(d1));
  const std::vector<Cell> xi_cells = cells_of(abscissas(d2));
  const std::vector<Cell> eta_cells = cells_of(ordinates(d2));

  std::vector<std::vector<std::size_t>> second(xi_cells.size(),
                                               std::vector<std::size_t>(eta_cells.size()));
  for (std::size_t c = 0; c < xi_cells.size(); ++c) {
    for (std::size_t e = 0; e < eta_cells.size(); ++e) {
      second[c][e] = cell_value(d2, xi_cells[c], eta_cells[e]);
    }
  }

  EarlierBound best{Real(0), std::nullopt};
  for (const Cell& xs : x_cells) {
    if (!xs.lo) continue;
    for (const Cell& ys : y_cells) {
      // Some y in the cell must lie above x.
      if (!less_than(*xs.lo, ys.hi)) continue;
      const std::size_t first = cell_value(d1, xs, ys);
      if (first == 0) continue;
      for (std::size_t c = 0; c < xi_cells.size(); ++c) {
        for (std::size_t e = 0; e < eta_cells.size(); ++e) {
          if (second[c][e] >= first) continue;
          auto sup = cell_pair_sup(*xs.lo, ys.hi, xi_cells[c], eta_cells[e]);
          if (!sup) continue;
          if (!best.witness || best.value < sup->value) {
            best.value = sup->value;
            best.witness = sup->witness;
          }
        }
      }
    }
  }
  return best;
}

IsomorphismDistance best_isomorphism(const SizePair& sp1, const SizePair& sp2, std::size_t cap) {
  if (sp1.size() > cap || sp2.size() > cap) {
    throw SizeCapExceeded("isomorphism enumeration limited to " + std::to_string(cap) +
                          " vertices");
  }
  const std::size_t n = sp1.size();
  if (sp2.size() != n || sp1.edges().size() != sp2.edges().size()) {
    throw NotIsomorphic("graphs differ in vertex or edge count");
  }

  // Breadth-first order so each new vertex is constrained by a mapped
  // neighbour as early as possible.
  std::vector<VertexIndex> order;
  std::vector<char> seen(n, 0);
  std::queue<VertexIndex> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop();
    order.push_back(v);
    for (VertexIndex u : sp1.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push(u);
      }
    }
  }

  std::vector<VertexIndex> map(n, n);
  std::vector<char> used(n, 0);
  std::optional<IsomorphismDistance> best;

  std::function<void(std::size_t, const Real&)> extend = [&](std::size_t k, const Real& current) {
    if (best && best->value <= current) return;
    if (k == n) {
      best = IsomorphismDistance{current, map};
      return;
    }
    const VertexIndex v = order[k];
    for (VertexIndex w = 0; w < n; ++w) {
      if (used[w] || sp1.neighbors(v).size() != sp2.neighbors(w).size()) continue;
      bool consistent = true;
      for (VertexIndex u : sp1.neighbors(v)) {
        if (map[u] == n) continue;
        const auto nbrs = sp2.neighbors(w);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), map[u])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      map[v] = w;
      used[w] = 1;
      extend(k + 1, max(current, abs(sp1.value(v) - sp2.value(w))));
      used[w] = 0;
      map[v] = n;
    }
  };
  extend(0, Real(0));
  if (!best) throw NotIsomorphic("no graph isomorphism exists");
  return *best;
}

Real exact_graph_pseudo_distance(const SizePair& sp1, const SizePair& sp2, std::size_t cap) {
  return best_isomorphism(sp1, sp2, cap).value;
}

bool BoundReport::chain_holds() const {
  if (d_match < earlier.value) return false;
  return !exact_pseudo_distance || d_match <= *exact_pseudo_distance;
}

BoundReport bound_report(const SizePair& sp1, const SizePair& sp2, std::size_t cap) {
  const Diagram d1 = extract_diagram(sp1);
  const Diagram d2 = extract_diagram(sp2);
  MatchingResult matched = matching_distance(d1, d2);
  BoundReport report{std::move(matched.distance), std::move(matched.matching),
                     earlier_bound(d1, d2), std::nullopt, ""};
  try {
    report.exact_pseudo_distance = exact_graph_pseudo_distance(sp1, sp2, cap);
  } catch (const SizeCapExceeded& e) {
    report.exact_skipped_reason = e.what();
  } catch (const NotIsomorphic& e) {
    report.exact_skipped_reason = e.what();
  }
  if (!report.chain_holds()) {
    throw ChainViolation("bound chain violated: earlier " + to_string(report.earlier.value) +
                         ", matching " + to_string(report.d_match) + ", exact " +
                         (report.exact_pseudo_distance ? to_string(*report.exact_pseudo_distance)
                                                       : std::string("n/a")));
  }
  return report;
}

}  // namespace sizematch
