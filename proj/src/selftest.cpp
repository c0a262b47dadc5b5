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

#include "sizematch/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

#include "sizematch/bounds.hpp"
#include "sizematch/diagram.hpp"
#include "sizematch/generators.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/realize.hpp"

namespace sizematch {

namespace {

using Failure = std::optional<std::string>;

// Runs a check, turning escaped exceptions into failures.
template <typename T, typename Check>
Failure guarded(const T& instance, const Check& check) {
  try {
    return check(instance);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

// Greedy shrinking: take the first smaller candidate that still fails
// until none does.
template <typename T, typename Candidates, typename Check>
T minimize(T instance, const Candidates& candidates, const Check& check) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& smaller : candidates(instance)) {
      if (guarded(smaller, check)) {
        instance = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return instance;
}

template <typename T>
struct Case {
  T instance;
  Failure failure;
};

// Generates `count` instances, checks each, and on the first failure
// shrinks it and records the dump.
template <typename T, typename Generate, typename Check, typename Candidates, typename Dump>
void run_cases(SuiteResult& result, std::size_t count, const Generate& generate, const Check& check,
               const Candidates& candidates, const Dump& dump) {
  for (std::size_t i = 0; i < count; ++i) {
    T instance = generate();
    ++result.cases;
    if (Failure failure = guarded(instance, check)) {
      T small = minimize(std::move(instance), candidates, check);
      result.passed = false;
      result.detail = "case " + std::to_string(i) + ": " + *guarded(small, check);
      result.counterexample = dump(small);
      return;
    }
  }
  result.passed = true;
  result.detail = std::to_string(result.cases) + " cases";
}

Rng suite_rng(const SelftestConfig& config, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), salt};
  return Rng(seq);
}

// ---- instance shrinking ----

std::vector<SizePair> smaller_graphs(const SizePair& sp) {
  std::vector<SizePair> out;
  for (VertexIndex v = 0; v < sp.size(); ++v) {
    if (auto g = remove_vertex(sp, v)) out.push_back(std::move(*g));
  }
  return out;
}

std::vector<Diagram> smaller_diagrams(const Diagram& d) {
  std::vector<Diagram> out;
  for (std::size_t k = 0; k < d.points().size(); ++k) {
    std::vector<Cornerpoint> points(d.points().begin(), d.points().end());
    if (--points[k].multiplicity == 0) points.erase(points.begin() + static_cast<long>(k));
    out.emplace_back(d.infinity_x(), std::move(points));
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<Diagram, N>> smaller_tuples(const std::array<Diagram, N>& ds) {
  std::vector<std::array<Diagram, N>> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (auto& smaller : smaller_diagrams(ds[i])) {
      std::array<Diagram, N> copy = ds;
      copy[i] = std::move(smaller);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

template <std::size_t N>
Json dump_tuple(const std::array<Diagram, N>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

// ---- representation and multiplicity ----

// Critical values, a quarter of the smallest gap on either side of each,
// and one value beyond each end.
std::vector<Real> test_grid(const SizePair& sp) {
  const auto& levels = sp.levels();
  Real quarter = make_real(1, 4);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    quarter = min(quarter, Real((levels[i] - levels[i - 1]) / 4));
  }
  std::vector<Real> grid{Real(levels.front() - 1), Real(levels.back() + 1)};
  for (const Real& c : levels) {
    grid.push_back(c);
    grid.push_back(c - quarter);
    grid.push_back(c + quarter);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

Failure check_representation(const SizePair& sp) {
  const Diagram d = extract_diagram(sp);
  if (d.infinity_x() != sp.min_value()) return "abscissa at infinity differs from min value";
  const std::vector<Real> grid = test_grid(sp);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const std::size_t direct = reduced_size_function(sp, grid[i], grid[j]);
      const std::size_t represented = evaluate_diagram(d, grid[i], grid[j]);
      if (direct != represented) {
        return "at (" + to_string(grid[i]) + ", " + to_string(grid[j]) + "): direct " +
               std::to_string(direct) + ", from diagram " + std::to_string(represented);
      }
    }
  }
  return std::nullopt;
}

Failure check_multiplicity(const SizePair& sp) {
  const Diagram d = extract_diagram(sp);
  std::map<std::pair<Real, Real>, std::size_t> extracted;
  for (const auto& p : d.points()) extracted[{p.x, p.y}] = p.multiplicity;
  const std::vector<Real> grid = test_grid(sp);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::size_t at_infinity = multiplicity_at_infinity(sp, grid[i]);
    if (at_infinity != (grid[i] == d.infinity_x() ? 1u : 0u)) {
      return "multiplicity at infinity " + std::to_string(at_infinity) + " at k = " +
             to_string(grid[i]);
    }
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const auto it = extracted.find({grid[i], grid[j]});
      const std::size_t expected = it == extracted.end() ? 0 : it->second;
      const std::size_t oracle = multiplicity(sp, grid[i], grid[j]);
      if (oracle != expected) {
        return "at (" + to_string(grid[i]) + ", " + to_string(grid[j]) + "): extracted " +
               std::to_string(expected) + ", four-term count " + std::to_string(oracle);
      }
    }
  }
  return std::nullopt;
}

// ---- stability ----

struct Perturbed {
  SizePair sp;
  std::vector<Real> values;
  Real eps;
};

Failure check_stability(const Perturbed& c) {
  const StabilityProbe probe = stability_probe(c.sp, c.values, c.eps);
  if (!probe.holds) return "matching distance " + to_string(probe.distance) + " > eps " + to_string(c.eps);
  if (c.eps < probe.infinity_displacement) {
    return "minimum moved by " + to_string(probe.infinity_displacement) + " > eps " + to_string(c.eps);
  }
  return std::nullopt;
}

std::vector<Perturbed> smaller_perturbed(const Perturbed& c) {
  std::vector<Perturbed> out;
  for (VertexIndex v = 0; v < c.sp.size(); ++v) {
    if (auto g = remove_vertex(c.sp, v)) {
      std::vector<Real> values = c.values;
      values.erase(values.begin() + static_cast<long>(v));
      out.push_back({std::move(*g), std::move(values), c.eps});
    }
  }
  return out;
}

// ---- matching and metric ----

using DiagramPair = std::array<Diagram, 2>;
using DiagramTriple = std::array<Diagram, 3>;

Failure check_matching_oracle(const DiagramPair& p, std::size_t cap) {
  const MatchingResult solved = matching_distance(p[0], p[1]);
  const Real oracle = brute_force_matching_distance(p[0], p[1], cap);
  if (solved.distance != oracle) {
    return "solver " + to_string(solved.distance) + ", enumeration " + to_string(oracle);
  }
  if (!covers_diagrams(solved.matching, p[0], p[1])) return "witness is not a bijection";
  const ExtendedReal cost = matching_cost(solved.matching);
  if (cost.infinite || cost.value != solved.distance || solved.matching.bottleneck_cost != solved.distance) {
    return "witness cost " + to_string(cost) + " differs from distance " + to_string(solved.distance);
  }
  return std::nullopt;
}

Failure check_metric(const DiagramTriple& t) {
  const Real ab = matching_distance(t[0], t[1]).distance;
  const Real ba = matching_distance(t[1], t[0]).distance;
  const Real bc = matching_distance(t[1], t[2]).distance;
  const Real ac = matching_distance(t[0], t[2]).distance;
  for (const auto& d : t) {
    const Real self = matching_distance(d, d).distance;
    if (self != 0) return "d(a, a) = " + to_string(self);
  }
  if (ab != ba) return "asymmetric: " + to_string(ab) + " vs " + to_string(ba);
  if (ab == 0 && !(t[0] == t[1])) return "distinct diagrams at distance 0";
  if (ab + bc < ac) {
    return "triangle: d(a,c) = " + to_string(ac) + " > " + to_string(ab) + " + " + to_string(bc);
  }
  return std::nullopt;
}

// ---- bound chain ----

Failure check_chain(const IsomorphicPair& p, std::size_t cap) {
  const BoundReport report = bound_report(p.first, p.second, cap);
  if (!report.exact_pseudo_distance) return "exact value skipped: " + report.exact_skipped_reason;
  if (!report.chain_holds()) return "chain violated";
  // The relabelling itself is an isomorphism, so it bounds the optimum.
  Real through_relabel(0);
  for (VertexIndex v = 0; v < p.first.size(); ++v) {
    through_relabel = max(through_relabel, abs(p.first.value(v) - p.second.value(p.permutation[v])));
  }
  if (through_relabel < *report.exact_pseudo_distance) {
    return "enumeration missed the generating isomorphism";
  }
  return std::nullopt;
}

std::vector<IsomorphicPair> smaller_iso_pairs(const IsomorphicPair& p) {
  std::vector<IsomorphicPair> out;
  for (VertexIndex v = 0; v < p.first.size(); ++v) {
    auto first = remove_vertex(p.first, v);
    auto second = remove_vertex(p.second, p.permutation[v]);
    if (!first || !second) continue;
    std::vector<VertexIndex> perm;
    for (VertexIndex u = 0; u < p.first.size(); ++u) {
      if (u == v) continue;
      perm.push_back(p.permutation[u] - (p.permutation[u] > p.permutation[v] ? 1 : 0));
    }
    out.push_back({std::move(*first), std::move(*second), std::move(perm)});
  }
  return out;
}

// ---- realization ----

Failure check_realization(const DiagramPair& p) {
  const Realization r = realize(p[0], p[1]);
  const RealizationCheck check = verify_realization(p[0], p[1], r, 1);
  if (!check.phi_round_trip) return "first field extracts to " + to_json(check.phi_diagram).dump();
  if (!check.psi_round_trip) return "second field extracts to " + to_json(check.psi_diagram).dump();
  if (!check.tight) {
    return "node gap " + to_string(check.max_gap) + " vs matching distance " + to_string(r.distance);
  }
  if (!check.refinement_stable) return "diagram changes under refinement";
  return std::nullopt;
}

// ---- fixture ----

Failure check_fixture() {
  const SizePair sp = path_fixture();
  const Diagram d = extract_diagram(sp);
  const Diagram expected(Real(0), {{Real(0), Real(3), 1}, {Real(1), Real(2), 1}});
  if (!(d == expected)) return "diagram " + to_json(d).dump();

  auto value = [&](long xn, long xd, long yn, long yd) {
    return reduced_size_function(sp, make_real(xn, xd), make_real(yn, yd));
  };
  struct Probe {
    long xn, xd, yn, yd;
    std::size_t expected;
  };
  // Value 0 left of min phi, 2 below the last merge, 1 above it, 3 where
  // both proper cornerpoints lie up and to the left.
  const Probe probes[] = {{-1, 2, 1, 1, 0}, {-1, 4, 5, 1, 0}, {1, 2, 1, 1, 2}, {1, 2, 5, 2, 2},
                          {3, 2, 5, 2, 2},  {1, 2, 4, 1, 1},  {5, 2, 7, 2, 1}, {3, 2, 7, 4, 3},
                          {1, 1, 3, 2, 3}};
  for (const auto& p : probes) {
    const std::size_t got = value(p.xn, p.xd, p.yn, p.yd);
    if (got != p.expected) {
      return "l(" + std::to_string(p.xn) + "/" + std::to_string(p.xd) + ", " + std::to_string(p.yn) +
             "/" + std::to_string(p.yd) + ") = " + std::to_string(got);
    }
  }
  // In the region of value 3 the value is the sum of the multiplicities of
  // the cornerpoints up and to the left.
  const Real x = make_real(3, 2);
  const Real y = make_real(7, 4);
  std::size_t summed = x >= d.infinity_x() ? 1 : 0;
  for (const auto& p : d.points()) {
    if (p.x <= x && p.y > y) summed += multiplicity(sp, p.x, p.y);
  }
  if (summed != 3 || evaluate_diagram(d, x, y) != 3) {
    return "summation identity gives " + std::to_string(summed);
  }
  if (multiplicity(sp, make_real(1, 2), make_real(5, 2)) != 0) return "spurious cornerpoint at (0.5, 2.5)";
  return std::nullopt;
}

// ---- suite table ----

using SuiteFn = std::function<void(SuiteResult&, const SelftestConfig&)>;

struct Suite {
  std::string name;
  bool needs_oracle_cap;
  SuiteFn run;
};

Json dump_graph(const SizePair& sp) { return to_json(sp); }

const std::vector<Suite>& suites() {
  static const std::vector<Suite> table = {
      {"representation", false,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 1);
         run_cases<SizePair>(
             r, c.graphs,
             [&] {
               // Alternate tie-heavy and nearly distinct values.
               const ValueSpec spec = r.cases % 2 ? ValueSpec{6, 1} : ValueSpec{100, 8};
               return random_connected_graph(rng, 1, c.max_graph_vertices, spec);
             },
             check_representation, smaller_graphs, dump_graph);
       }},
      {"multiplicity", false,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 1);
         run_cases<SizePair>(
             r, c.graphs,
             [&] {
               const ValueSpec spec = r.cases % 2 ? ValueSpec{6, 1} : ValueSpec{100, 8};
               return random_connected_graph(rng, 1, c.max_graph_vertices, spec);
             },
             check_multiplicity, smaller_graphs, dump_graph);
       }},
      {"stability", false,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 3);
         run_cases<Perturbed>(
             r, c.stability_trials,
             [&] {
               SizePair sp = random_connected_graph(rng, 1, 30, ValueSpec{5, 4});
               Real eps = random_epsilon(rng);
               std::vector<Real> values = perturb(rng, sp.values(), eps);
               return Perturbed{std::move(sp), std::move(values), std::move(eps)};
             },
             check_stability, smaller_perturbed,
             [](const Perturbed& p) {
               return Json{{"graph", to_json(p.sp)},
                           {"perturbed", to_json(p.sp.with_values(p.values))},
                           {"eps", to_string(p.eps)}};
             });
       }},
      {"matching-oracle", true,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 4);
         const std::size_t points = std::min<std::size_t>(c.cap, 8);
         run_cases<DiagramPair>(
             r, c.matching_pairs,
             [&] {
               return DiagramPair{random_diagram(rng, points, ValueSpec{6, 4}, 3),
                                  random_diagram(rng, points, ValueSpec{6, 4}, 3)};
             },
             [&](const DiagramPair& p) { return check_matching_oracle(p, c.cap); },
             smaller_tuples<2>, dump_tuple<2>);
       }},
      {"metric-axioms", false,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 5);
         run_cases<DiagramTriple>(
             r, c.metric_triples,
             [&] {
               return DiagramTriple{random_diagram(rng, 8, ValueSpec{6, 4}),
                                    random_diagram(rng, 8, ValueSpec{6, 4}),
                                    random_diagram(rng, 8, ValueSpec{6, 4})};
             },
             check_metric, smaller_tuples<3>, dump_tuple<3>);
       }},
      {"bound-chain", true,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 6);
         const std::size_t vertices = std::min(c.cap, c.chain_max_vertices);
         run_cases<IsomorphicPair>(
             r, c.chain_pairs, [&] { return random_isomorphic_pair(rng, vertices, ValueSpec{5, 4}); },
             [&](const IsomorphicPair& p) { return check_chain(p, c.cap); }, smaller_iso_pairs,
             [](const IsomorphicPair& p) {
               return Json{{"first", to_json(p.first)},
                           {"second", to_json(p.second)},
                           {"permutation", p.permutation}};
             });
       }},
      {"realization", false,
       [](SuiteResult& r, const SelftestConfig& c) {
         Rng rng = suite_rng(c, 7);
         run_cases<DiagramPair>(
             r, c.realization_pairs,
             [&] {
               return DiagramPair{random_diagram(rng, c.realization_max_points, ValueSpec{4, 4}),
                                  random_diagram(rng, c.realization_max_points, ValueSpec{4, 4})};
             },
             check_realization, smaller_tuples<2>, dump_tuple<2>);
       }},
      {"path-fixture", false,
       [](SuiteResult& r, const SelftestConfig&) {
         r.cases = 1;
         const Failure failure = guarded(0, [](int) { return check_fixture(); });
         r.passed = !failure;
         r.detail = failure ? *failure : "diagram and region values match";
         if (failure) r.counterexample = to_json(path_fixture());
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SelftestConfig& config) {
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const Suite& s) { return s.name == name; });
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  if (it->needs_oracle_cap && config.cap == 0) {
    result.passed = true;
    result.skipped = true;
    result.detail = "oracle cap is 0";
    return result;
  }
  const auto start = std::chrono::steady_clock::now();
  it->run(result, config);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_selftest(const SelftestConfig& config,
                                      const std::vector<std::string>& only, std::size_t jobs) {
  std::vector<std::string> selected;
  for (const auto& name : suite_names()) {
    if (only.empty() || std::find(only.begin(), only.end(), name) != only.end()) {
      selected.push_back(name);
    }
  }
  for (const auto& name : only) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  }
  std::vector<SuiteResult> results;
  if (jobs <= 1) {
    for (const auto& name : selected) results.push_back(run_suite(name, config));
    return results;
  }
  // Suites share nothing mutable; each owns its generator.
  std::vector<std::future<SuiteResult>> pending;
  std::size_t next = 0;
  results.resize(selected.size());
  std::vector<std::size_t> slot;
  while (next < selected.size() || !pending.empty()) {
    while (next < selected.size() && pending.size() < jobs) {
      pending.push_back(std::async(std::launch::async, run_suite, selected[next], config));
      slot.push_back(next++);
    }
    results[slot.front()] = pending.front().get();
    pending.erase(pending.begin());
    slot.erase(slot.begin());
  }
  return results;
}

SizePair path_fixture() {
  return SizePair({"v1", "v2", "v3", "v4", "v5"},
                  {Real(0), Real(2), Real(1), Real(3), Real(0)},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

Json to_json(const SizePair& sp) {
  Json vertices = Json::array();
  for (VertexIndex v = 0; v < sp.size(); ++v) {
    vertices.push_back(Json::array({sp.ids()[v], to_string(sp.value(v))}));
  }
  Json edges = Json::array();
  for (const auto& [u, v] : sp.edges()) edges.push_back(Json::array({sp.ids()[u], sp.ids()[v]}));
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::optional<SizePair> remove_vertex(const SizePair& sp, VertexIndex v) {
  if (sp.size() <= 1) return std::nullopt;
  std::vector<std::string> ids;
  std::vector<Real> values;
  for (VertexIndex u = 0; u < sp.size(); ++u) {
    if (u == v) continue;
    ids.push_back(sp.ids()[u]);
    values.push_back(sp.value(u));
  }
  auto shift = [v](VertexIndex u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (const auto& [a, b] : sp.edges()) {
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  }
  try {
    return SizePair(std::move(ids), std::move(values), std::move(edges));
  } catch (const DisconnectedGraph&) {
    return std::nullopt;
  }
}

}  // namespace sizematch
