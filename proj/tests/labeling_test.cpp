// Copyright 2026 The logcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "logcount/labeling.hpp"
#include "logcount/synth.hpp"
#include "oracles.hpp"

namespace logcount {
namespace {

constexpr Connectivity kBoth[] = {Connectivity::four, Connectivity::eight};

TEST(LabelScan, EmptyMaskHasNoComponents) {
  const auto lm = label_scan(BinaryMask(8, 8), Connectivity::four);
  EXPECT_EQ(lm.component_count(), 0);
  for (auto l : lm.labels()) EXPECT_EQ(l, 0);
  EXPECT_EQ(label_union_find(BinaryMask(8, 8), Connectivity::four), lm);
}

TEST(LabelScan, DistantPixelsAreSeparate) {
  BinaryMask m(6, 6);
  m.set(0, 0, true);
  m.set(5, 5, true);
  const auto lm = label_scan(m, Connectivity::four);
  EXPECT_EQ(lm.component_count(), 2);
  EXPECT_EQ(lm.at(0, 0), 1);
  EXPECT_EQ(lm.at(5, 5), 2);
}

TEST(LabelScan, DiagonalTouchDependsOnConnectivity) {
  BinaryMask m(4, 4);
  m.set(1, 1, true);
  m.set(2, 2, true);
  EXPECT_EQ(label_scan(m, Connectivity::four).component_count(), 2);
  EXPECT_EQ(label_scan(m, Connectivity::eight).component_count(), 1);
  EXPECT_EQ(label_union_find(m, Connectivity::four).component_count(), 2);
  EXPECT_EQ(label_union_find(m, Connectivity::eight).component_count(), 1);
}

TEST(LabelScan, AntiDiagonalNeedsNorthEastProbe) {
  const auto m = BinaryMask::from_rows({"..#", ".#.", "#.."});
  EXPECT_EQ(label_scan(m, Connectivity::eight).component_count(), 1);
  EXPECT_EQ(label_union_find(m, Connectivity::eight).component_count(), 1);
  EXPECT_EQ(label_scan(m, Connectivity::four).component_count(), 3);
}

TEST(LabelScan, UShapeMergesThroughRecordedEquivalence) {
  // The two arms receive different provisional labels and meet on the last row.
  const auto m = BinaryMask::from_rows({
      "#...#",
      "#...#",
      "#...#",
      "#####",
  });
  const auto flood = testing::flood_fill_labels(m, Connectivity::four);
  ASSERT_EQ(flood.count, 1);
  const auto lm = label_scan(m, Connectivity::four);
  EXPECT_EQ(lm.component_count(), 1);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 5; ++x) EXPECT_EQ(lm.at(x, y), m.at(x, y) ? 1 : 0);
}

TEST(LabelScan, NumberingFollowsFirstEncounter) {
  // Ids follow the raster position of each component's first pixel.
  const auto m = BinaryMask::from_rows({
      "...#.",
      "#..#.",
      "#....",
  });
  const auto lm = label_scan(m, Connectivity::eight);
  EXPECT_EQ(lm.at(3, 0), 1);
  EXPECT_EQ(lm.at(0, 1), 2);
}

TEST(LabelUnionFind, FullRowIsOneComponent) {
  const auto lm = label_union_find(BinaryMask(17, 1, true), Connectivity::four);
  EXPECT_EQ(lm.component_count(), 1);
  for (auto l : lm.labels()) EXPECT_EQ(l, 1);
}

TEST(Labeling, ImplementationsAgreeWithFloodFillOnRandomMasks) {
  Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = testing::random_mask(rng, 64);
    for (auto conn : kBoth) {
      const auto scan = label_scan(m, conn);
      const auto uf = label_union_find(m, conn);
      const auto flood = testing::flood_fill_labels(m, conn);
      ASSERT_EQ(scan, uf) << "trial " << trial;
      ASSERT_EQ(scan.component_count(), flood.count) << "trial " << trial;
      ASSERT_TRUE(testing::same_partition(testing::to_vector(scan.labels()),
                                          flood.labels))
          << "trial " << trial;
      // The BFS discovers components in raster order, so ids match too.
      ASSERT_EQ(testing::to_vector(scan.labels()), flood.labels);
    }
  }
}

TEST(Labeling, AdversarialFixtures) {
  for (const auto& m : testing::adversarial_fixtures()) {
    for (auto conn : kBoth) {
      const auto flood = testing::flood_fill_labels(m, conn);
      const auto scan = label_scan(m, conn);
      EXPECT_EQ(scan.component_count(), flood.count);
      EXPECT_EQ(testing::to_vector(scan.labels()), flood.labels);
      EXPECT_EQ(label_union_find(m, conn), scan);
    }
  }
}

TEST(Labeling, CheckerboardWorstCase) {
  const auto m = testing::checkerboard(9, 7);
  EXPECT_EQ(label_scan(m, Connectivity::four).component_count(), 32);
  EXPECT_EQ(label_union_find(m, Connectivity::four).component_count(), 32);
  EXPECT_EQ(label_scan(m, Connectivity::eight).component_count(), 1);
}

TEST(Labeling, CanonicalNumberingSurvivesPermutation) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testing::random_mask(rng, 32);
    const auto lm = label_union_find(m, Connectivity::eight);
    std::vector<Label> perm(static_cast<std::size_t>(lm.component_count()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size() - 1; i > 1; --i) {
      std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(i)))]);
    }
    std::vector<Label> shuffled(lm.labels().begin(), lm.labels().end());
    for (auto& l : shuffled) l = perm[l];
    const LabelMap permuted(lm.width(), lm.height(), shuffled, lm.component_count());
    ASSERT_EQ(canonicalize(permuted), lm);
  }
}

TEST(Labeling, CountProperties) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = testing::random_mask(rng, 24);
    const int four = label_scan(m, Connectivity::four).component_count();
    const int eight = label_scan(m, Connectivity::eight).component_count();
    ASSERT_LE(eight, four);
    // Adding one pixel can open at most one new component.
    const int x = rng.uniform_int(0, m.width() - 1);
    const int y = rng.uniform_int(0, m.height() - 1);
    m.set(x, y, true);
    for (auto conn : kBoth) {
      BinaryMask before = m;
      before.set(x, y, false);
      ASSERT_LE(label_scan(m, conn).component_count(),
                label_scan(before, conn).component_count() + 1);
    }
  }
}

TEST(ComponentStats, SinglePixel) {
  BinaryMask m(6, 6);
  m.set(3, 4, true);
  const auto stats = component_stats(label_scan(m, Connectivity::eight));
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].label, 1);
  EXPECT_EQ(stats[0].area, 1);
  EXPECT_EQ(stats[0].bbox, (BoundingBox{3, 4, 1, 1}));
  EXPECT_DOUBLE_EQ(stats[0].centroid_x, 3.0);
  EXPECT_DOUBLE_EQ(stats[0].centroid_y, 4.0);
}

TEST(ComponentStats, TwoByThreeBlock) {
  // Pixels (0..1, 0..2): mean x = 0.5, mean y = 1.0.
  const auto m = BinaryMask::from_rows({"##..", "##..", "##..", "...."});
  const auto stats = component_stats(label_scan(m, Connectivity::four));
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].area, 6);
  EXPECT_EQ(stats[0].bbox, (BoundingBox{0, 0, 2, 3}));
  EXPECT_DOUBLE_EQ(stats[0].centroid_x, 0.5);
  EXPECT_DOUBLE_EQ(stats[0].centroid_y, 1.0);
}

TEST(ComponentStats, EmptyMapGivesEmptyList) {
  EXPECT_TRUE(component_stats(label_scan(BinaryMask(3, 3), Connectivity::four)).empty());
}

TEST(ComponentStats, InvariantsOnRandomMasks) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_mask(rng, 48);
    const auto lm = label_union_find(m, Connectivity::eight);
    const auto stats = component_stats(lm);
    std::int64_t total = 0;
    for (const auto& s : stats) {
      total += s.area;
      ASSERT_GE(s.area, 1);
      ASSERT_GE(s.centroid_x, s.bbox.x);
      ASSERT_LE(s.centroid_x, s.bbox.x + s.bbox.width - 1);
      ASSERT_GE(s.centroid_y, s.bbox.y);
      ASSERT_LE(s.centroid_y, s.bbox.y + s.bbox.height - 1);
    }
    ASSERT_EQ(total, m.foreground_count());
    for (int y = 0; y < lm.height(); ++y)
      for (int x = 0; x < lm.width(); ++x)
        if (lm.at(x, y)) ASSERT_TRUE(stats[lm.at(x, y) - 1].bbox.contains(x, y));
  }
}

TEST(ConnectivityNames, Parse) {
  EXPECT_EQ(parse_connectivity("4"), Connectivity::four);
  EXPECT_EQ(parse_connectivity("8"), Connectivity::eight);
  EXPECT_THROW((void)parse_connectivity("6"), std::invalid_argument);
}

}  // namespace
}  // namespace logcount
