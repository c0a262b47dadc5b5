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

#include <gtest/gtest.h>

#include "sizematch/generators.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/selftest.hpp"

namespace sizematch {
namespace {

Real r(long n, long d = 1) { return make_real(n, d); }
ExtendedPoint pt(const Real& x, const Real& y) { return ExtendedPoint::proper(x, y); }
ExtendedReal fin(const Real& v) { return ExtendedReal::finite(v); }

TEST(PseudoDistance, Examples) {
  EXPECT_EQ(pseudo_distance(pt(r(1), r(3)), pt(r(2), r(4))), fin(r(1)));
  EXPECT_EQ(pseudo_distance(ExtendedPoint::at_infinity(r(0)), ExtendedPoint::at_infinity(r(2))),
            fin(r(2)));
  EXPECT_EQ(pseudo_distance(pt(r(1), r(3, 2)), pt(r(10), r(51, 5))), fin(r(1, 4)));
  EXPECT_EQ(pseudo_distance(pt(r(1), r(3)), pt(r(1), r(3))), fin(r(0)));
}

TEST(PseudoDistance, DiagonalAndInfinityConventions) {
  const ExtendedPoint p = pt(r(1), r(3));
  EXPECT_EQ(pseudo_distance(p, ExtendedPoint::diagonal(r(2))), fin(r(1)));
  EXPECT_EQ(pseudo_distance(p, ExtendedPoint::diagonal(r(7))), fin(r(1)));
  EXPECT_EQ(pseudo_distance(ExtendedPoint::diagonal(r(0)), ExtendedPoint::diagonal(r(9))), fin(r(0)));
  EXPECT_TRUE(pseudo_distance(p, ExtendedPoint::at_infinity(r(1))).infinite);
  EXPECT_TRUE(pseudo_distance(ExtendedPoint::at_infinity(r(1)), ExtendedPoint::diagonal(r(1))).infinite);
}

TEST(PseudoDistance, SymmetricAndTriangularOnRandomPoints) {
  Rng rng(4);
  std::uniform_int_distribution<int> kind(0, 5);
  auto draw = [&] {
    const Diagram d = random_diagram(rng, 1, ValueSpec{6, 4}, 1);
    const int k = kind(rng);
    if (k == 0) return ExtendedPoint::at_infinity(d.infinity_x());
    if (k == 1 || d.points().empty()) return ExtendedPoint::diagonal(d.infinity_x());
    return pt(d.points()[0].x, d.points()[0].y);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const ExtendedPoint a = draw(), b = draw(), c = draw();
    const ExtendedReal ab = pseudo_distance(a, b);
    EXPECT_EQ(ab, pseudo_distance(b, a));
    const ExtendedReal ac = pseudo_distance(a, c);
    const ExtendedReal bc = pseudo_distance(b, c);
    if (!ab.infinite && !bc.infinite) {
      ASSERT_FALSE(ac.infinite);
      EXPECT_LE(ac.value, ab.value + bc.value);
    }
  }
}

TEST(MatchingDistance, IdenticalDiagrams) {
  const Diagram d(r(0), {{r(1), r(2), 2}, {r(0), r(3), 1}});
  const MatchingResult m = matching_distance(d, d);
  EXPECT_EQ(m.distance, 0);
  for (const auto& pair : m.matching.pairs) EXPECT_EQ(pair.left, pair.right);
}

TEST(MatchingDistance, PointToDiagonal) {
  const MatchingResult m = matching_distance(Diagram(r(0), {{r(1), r(3), 1}}), Diagram(r(0)));
  EXPECT_EQ(m.distance, 1);
  ASSERT_EQ(m.matching.pairs.size(), 2u);
  EXPECT_EQ(m.matching.pairs[1].left, pt(r(1), r(3)));
  EXPECT_TRUE(m.matching.pairs[1].right.is_diagonal());
}

TEST(MatchingDistance, PathAgainstShiftedDiagram) {
  // (0,3) to (1.2,2.1) costs 1.2, beating 1.5 for the diagonal; (1,2) then
  // goes to the diagonal at 0.5, as do the infinity abscissas.
  const Diagram d1(r(0), {{r(1), r(2), 1}, {r(0), r(3), 1}});
  const Diagram d2(r(1, 2), {{r(6, 5), r(21, 10), 1}});
  EXPECT_EQ(matching_distance(d1, d2).distance, r(6, 5));
  EXPECT_EQ(brute_force_matching_distance(d1, d2), r(6, 5));
}

TEST(MatchingDistance, InfinityTermOnly) {
  EXPECT_EQ(matching_distance(Diagram(r(0)), Diagram(r(3, 10))).distance, r(3, 10));
  EXPECT_EQ(brute_force_matching_distance(Diagram(r(0)), Diagram(r(3, 10))), r(3, 10));
}

TEST(MatchingDistance, EqualCostAssignments) {
  const Diagram a(r(0), {{r(1), r(3), 1}});
  const Diagram b(r(0), {{r(2), r(4), 1}});
  EXPECT_EQ(brute_force_matching_distance(a, b), 1);
  EXPECT_EQ(matching_distance(a, b).distance, 1);
}

TEST(MatchingDistance, WitnessIsAnOptimalBijection) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram a = random_diagram(rng, 7, ValueSpec{5, 4}, 3);
    const Diagram b = random_diagram(rng, 7, ValueSpec{5, 4}, 3);
    const MatchingResult m = matching_distance(a, b);
    ASSERT_TRUE(covers_diagrams(m.matching, a, b));
    EXPECT_EQ(matching_cost(m.matching), fin(m.distance));
    EXPECT_EQ(m.matching.bottleneck_cost, m.distance);
    EXPECT_EQ(m.distance, brute_force_matching_distance(a, b));
    for (const auto& pair : m.matching.pairs) {
      if (pair.left.is_proper() && pair.right.is_proper()) {
        const Real norm = max(abs(pair.left.x() - pair.right.x()), abs(pair.left.y() - pair.right.y()));
        EXPECT_LE(norm, m.distance);
      }
    }
  }
}

TEST(BruteForce, RespectsTheCap) {
  const Diagram big(r(0), {{r(1), r(2), 9}});
  EXPECT_THROW(brute_force_matching_distance(big, Diagram(r(0))), SizeCapExceeded);
  EXPECT_EQ(brute_force_matching_distance(big, Diagram(r(0)), 9), r(1, 2));
}

TEST(CoversDiagrams, DetectsMissingPoints) {
  const Diagram a(r(0), {{r(1), r(3), 1}});
  Matching m{{{ExtendedPoint::at_infinity(r(0)), ExtendedPoint::at_infinity(r(0))}}, r(0)};
  EXPECT_FALSE(covers_diagrams(m, a, Diagram(r(0))));
  m.pairs.push_back({pt(r(1), r(3)), ExtendedPoint::diagonal(r(2))});
  EXPECT_TRUE(covers_diagrams(m, a, Diagram(r(0))));
}

TEST(Stability, UnperturbedAndPathExamples) {
  const SizePair sp = path_fixture();
  const StabilityProbe same = stability_probe(sp, sp.values(), r(0));
  EXPECT_EQ(same.distance, 0);
  EXPECT_TRUE(same.holds);
  const std::vector<Real> moved{r(0), r(2), r(21, 20), r(3), r(0)};
  const StabilityProbe probe = stability_probe(sp, moved, r(1, 20));
  EXPECT_LE(probe.distance, r(1, 20));
  EXPECT_TRUE(probe.holds);
  EXPECT_EQ(probe.infinity_displacement, 0);
}

TEST(Stability, RejectsPerturbationsBeyondEps) {
  const SizePair sp = path_fixture();
  const std::vector<Real> moved{r(0), r(2), r(2), r(3), r(0)};
  EXPECT_THROW(stability_probe(sp, moved, r(1, 2)), std::invalid_argument);
  EXPECT_THROW(stability_probe(sp, std::vector<Real>{r(0)}, r(1)), std::invalid_argument);
}

TEST(Stability, RandomPerturbations) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const SizePair sp = random_connected_graph(rng, 1, 20, ValueSpec{4, 4});
    const Real eps = random_epsilon(rng);
    const StabilityProbe probe = stability_probe(sp, perturb(rng, sp.values(), eps), eps);
    EXPECT_TRUE(probe.holds);
    EXPECT_LE(probe.infinity_displacement, eps);
  }
}

}  // namespace
}  // namespace sizematch
