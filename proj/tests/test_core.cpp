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
#include "sizematch/selftest.hpp"
#include "sizematch/size_pair.hpp"
#include "oracles.hpp"

namespace sizematch {
namespace {

Real r(long n, long d = 1) { return make_real(n, d); }

TEST(SizePair, RejectsEmptyGraph) {
  EXPECT_THROW(SizePair(std::vector<Real>{}, {}), InvalidSizePair);
}

TEST(SizePair, RejectsSelfLoopsAndDuplicateEdges) {
  EXPECT_THROW(SizePair({r(0), r(1)}, {{0, 1}, {1, 1}}), InvalidSizePair);
  EXPECT_THROW(SizePair({r(0), r(1)}, {{0, 1}, {1, 0}}), InvalidSizePair);
  EXPECT_THROW(SizePair({r(0), r(1)}, {{0, 2}}), InvalidSizePair);
}

TEST(SizePair, RejectsDuplicateIds) {
  EXPECT_THROW(SizePair({"a", "a"}, {r(0), r(1)}, {{0, 1}}), InvalidSizePair);
}

TEST(SizePair, DisconnectedGraphReportsComponentCount) {
  try {
    SizePair({r(0), r(2), r(1), r(3), r(0)}, {{0, 1}, {3, 4}});
    FAIL() << "expected DisconnectedGraph";
  } catch (const DisconnectedGraph& e) {
    EXPECT_EQ(e.component_count(), 3u);
  }
}

TEST(SizePair, LevelsAreSortedDistinctValues) {
  const SizePair sp = path_fixture();
  EXPECT_EQ(sp.levels(), (std::vector<Real>{r(0), r(1), r(2), r(3)}));
  EXPECT_EQ(sp.min_value(), 0);
  EXPECT_EQ(sp.max_value(), 3);
  EXPECT_EQ(sp.level_of(3), 3u);
  EXPECT_EQ(sp.count_levels_at_most(r(3, 2)), 2u);
}

TEST(SublevelComponents, PathExamples) {
  const SizePair sp = path_fixture();
  EXPECT_EQ(sublevel_components(sp, r(1)).components,
            (std::vector<std::vector<VertexIndex>>{{0}, {2}, {4}}));
  EXPECT_EQ(sublevel_components(sp, r(3)).components,
            (std::vector<std::vector<VertexIndex>>{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(sublevel_components(sp, r(-1)).components.empty());
}

TEST(ReducedSizeFunction, PathExamples) {
  const SizePair sp = path_fixture();
  EXPECT_EQ(reduced_size_function(sp, r(1, 2), r(1)), 2u);
  EXPECT_EQ(reduced_size_function(sp, r(-1), r(5)), 0u);
  EXPECT_EQ(reduced_size_function(sp, r(3), r(4)), 1u);
  EXPECT_EQ(reduced_size_function(sp, r(3, 2), r(7, 4)), 3u);
}

TEST(ReducedSizeFunction, RejectsPointsOffTheHalfPlane) {
  const SizePair sp = path_fixture();
  EXPECT_THROW(reduced_size_function(sp, r(1), r(1)), OutsideHalfPlane);
  EXPECT_THROW(reduced_size_function(sp, r(2), r(1)), OutsideHalfPlane);
}

TEST(ReducedSizeFunction, AgreesWithBreadthFirstCount) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const SizePair sp = random_connected_graph(rng, 1, 20, ValueSpec{5, 2});
    std::vector<Real> grid = sp.levels();
    grid.push_back(sp.min_value() - 1);
    grid.push_back(sp.max_value() + 1);
    for (const Real& x : grid) {
      for (const Real& y : grid) {
        if (!(x < y)) continue;
        ASSERT_EQ(reduced_size_function(sp, x, y), oracle::reduced_size(sp, x, y));
      }
    }
  }
}

TEST(ReducedSizeFunction, MonotoneInBothArguments) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const SizePair sp = random_connected_graph(rng, 1, 15, ValueSpec{6, 1});
    const auto& c = sp.levels();
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const std::size_t here = reduced_size_function(sp, c[i], c[j]);
        if (i + 1 < j) EXPECT_LE(here, reduced_size_function(sp, c[i + 1], c[j]));
        if (j + 1 < c.size()) EXPECT_GE(here, reduced_size_function(sp, c[i], c[j + 1]));
      }
    }
  }
}

TEST(ReducedSizeFunction, OneAboveTheMaximum) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SizePair sp = random_connected_graph(rng, 1, 12);
    EXPECT_EQ(reduced_size_function(sp, sp.max_value(), sp.max_value() + 1), 1u);
  }
}

TEST(ShiftedInequality, IdentityWithZeroShift) {
  const SizePair sp = path_fixture();
  const std::vector<VertexIndex> id{0, 1, 2, 3, 4};
  std::vector<QueryPoint> grid;
  for (long x = -1; x <= 4; ++x) {
    for (long y = x + 1; y <= 5; ++y) grid.push_back({r(x), r(y)});
  }
  EXPECT_TRUE(shifted_inequality_check(sp, sp, id, r(0), grid));
}

TEST(ShiftedInequality, PerturbedPathOverCriticalValues) {
  const SizePair sp1 = path_fixture();
  const SizePair sp2 = sp1.with_values({r(0), r(2), r(11, 10), r(3), r(0)});
  const std::vector<VertexIndex> id{0, 1, 2, 3, 4};
  std::vector<Real> values{r(0), r(1), r(11, 10), r(2), r(3)};
  std::vector<QueryPoint> grid;
  for (const Real& x : values) {
    for (const Real& y : values) {
      if (x < y) grid.push_back({x, y});
    }
  }
  EXPECT_TRUE(shifted_inequality_check(sp1, sp2, id, r(1, 10), grid));
  EXPECT_TRUE(shifted_inequality_check(sp2, sp1, id, r(1, 10), grid));
}

TEST(ShiftedInequality, RejectsBadWitness) {
  const SizePair sp1 = path_fixture();
  const SizePair sp2 = sp1.with_values({r(0), r(2), r(2), r(3), r(0)});
  const std::vector<VertexIndex> id{0, 1, 2, 3, 4};
  const std::vector<QueryPoint> grid{{r(0), r(1)}};
  EXPECT_THROW(shifted_inequality_check(sp1, sp2, id, r(1, 2), grid), std::invalid_argument);
  const std::vector<VertexIndex> not_iso{1, 0, 2, 3, 4};
  EXPECT_THROW(shifted_inequality_check(sp1, sp1, not_iso, r(5), grid), std::invalid_argument);
}

TEST(GraphIsomorphism, PathReversal) {
  const SizePair sp = path_fixture();
  EXPECT_TRUE(is_graph_isomorphism(sp, sp, std::vector<VertexIndex>{4, 3, 2, 1, 0}));
  EXPECT_FALSE(is_graph_isomorphism(sp, sp, std::vector<VertexIndex>{1, 0, 2, 3, 4}));
}

TEST(Real, DecimalParsingIsExact) {
  EXPECT_EQ(parse_decimal("0.1"), r(1, 10));
  EXPECT_EQ(parse_decimal("-2.5e-1"), r(-1, 4));
  EXPECT_EQ(parse_decimal("3"), r(3));
  EXPECT_THROW(parse_decimal("nan"), std::invalid_argument);
  EXPECT_THROW(parse_decimal("inf"), std::invalid_argument);
  EXPECT_THROW(parse_decimal("1,5"), std::invalid_argument);
}

TEST(Real, DoublesMeanTheirShortestDecimal) {
  EXPECT_EQ(from_double(0.1), r(1, 10));
  EXPECT_EQ(from_double(1.2), r(6, 5));
  EXPECT_EQ(to_string(r(1, 3)), "1/3");
  EXPECT_EQ(to_string(r(-5, 4)), "-1.25");
}

}  // namespace
}  // namespace sizematch
