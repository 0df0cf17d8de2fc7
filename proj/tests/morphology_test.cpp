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

#include "logcount/morphology.hpp"
#include "oracles.hpp"

namespace logcount {
namespace {

using testing::random_mask;
using testing::random_se;

BinaryMask filled_square_in(int canvas, int x0, int side) {
  BinaryMask m(canvas, canvas);
  for (int y = x0; y < x0 + side; ++y)
    for (int x = x0; x < x0 + side; ++x) m.set(x, y, true);
  return m;
}

TEST(StructuringElement, ShapesAndOffsets) {
  const auto box = StructuringElement::box(3);
  EXPECT_EQ(box.offsets().size(), 9u);
  const auto cross = StructuringElement::cross(5);
  EXPECT_EQ(cross.offsets().size(), 9u);
  EXPECT_TRUE(cross.contains(2, 0));
  EXPECT_FALSE(cross.contains(0, 0));
  EXPECT_EQ(StructuringElement::box(1).offsets(), (std::vector<Offset>{{0, 0}}));
}

TEST(StructuringElement, RejectsInvalidKernels) {
  EXPECT_THROW(StructuringElement::box(2), std::invalid_argument);
  EXPECT_THROW(StructuringElement::box(0), std::invalid_argument);
  EXPECT_THROW(StructuringElement(3, 3, std::vector<bool>(9, false)),
               std::invalid_argument);
  std::vector<bool> no_anchor(9, true);
  no_anchor[4] = false;
  EXPECT_THROW(StructuringElement(3, 3, no_anchor), std::invalid_argument);
  EXPECT_THROW(StructuringElement(3, 1, std::vector<bool>(4, true)),
               std::invalid_argument);
}

TEST(StructuringElement, ReflectIsPointReflection) {
  // . # .
  // . # #
  // . . .
  StructuringElement se(3, 3, {false, true, false, false, true, true, false, false, false});
  const auto r = se.reflect();
  EXPECT_TRUE(r.contains(1, 2));
  EXPECT_TRUE(r.contains(0, 1));
  EXPECT_FALSE(r.contains(2, 1));
  EXPECT_EQ(r.reflect(), se);
}

TEST(Erode, AllBackgroundStaysBackground) {
  BinaryMask m(6, 4);
  EXPECT_EQ(erode(m, StructuringElement::box(3)), m);
  EXPECT_EQ(erode(m, StructuringElement::cross(5)), m);
}

TEST(Erode, SinglePixelVanishes) {
  BinaryMask m(5, 5);
  m.set(2, 2, true);
  EXPECT_EQ(erode(m, StructuringElement::box(3)).foreground_count(), 0);
}

TEST(Erode, FullFiveByFiveKeepsCentralThreeByThree) {
  // Border pixels have out-of-bounds neighbors, which count as background.
  const auto out = erode(BinaryMask(5, 5, true), StructuringElement::box(3));
  EXPECT_EQ(out, BinaryMask::from_rows({".....", ".###.", ".###.", ".###.", "....."}));
}

TEST(Erode, IteratedTwiceOnSevenBySeven) {
  const auto se = StructuringElement::box(3);
  const auto m = BinaryMask(7, 7, true);
  EXPECT_EQ(erode_iterated(m, se, 0), m);
  EXPECT_EQ(erode_iterated(m, se, 1), erode(m, se));
  EXPECT_EQ(erode_iterated(m, se, 2),
            BinaryMask::from_rows({".......", ".......", "..###..", "..###..",
                                   "..###..", ".......", "......."}));
  EXPECT_THROW((void)erode_iterated(m, se, -1), std::invalid_argument);
}

TEST(Erode, CrossKeepsCornersThatBoxRemoves) {
  const auto m = filled_square_in(7, 1, 5);
  const auto by_cross = erode(m, StructuringElement::cross(3));
  const auto by_box = erode(m, StructuringElement::box(3));
  EXPECT_TRUE(by_box.subset_of(by_cross));
  EXPECT_EQ(by_box.foreground_count(), 9);
  EXPECT_EQ(by_cross.foreground_count(), 9);
  const auto plus = BinaryMask::from_rows({"..#..", ".###.", "#####", ".###.", "..#.."});
  EXPECT_EQ(erode(plus, StructuringElement::cross(3)).foreground_count(), 5);
  EXPECT_EQ(erode(plus, StructuringElement::box(3)).foreground_count(), 1);
}

TEST(Dilate, AllBackgroundStaysBackground) {
  BinaryMask m(4, 4);
  EXPECT_EQ(dilate(m, StructuringElement::box(3)), m);
}

TEST(Dilate, CenterPixelGrowsToBlock) {
  BinaryMask m(5, 5);
  m.set(2, 2, true);
  EXPECT_EQ(dilate(m, StructuringElement::box(3)),
            BinaryMask::from_rows({".....", ".###.", ".###.", ".###.", "....."}));
}

TEST(Dilate, UsesReflectedKernel) {
  // Kernel {anchor, east}. Dilation sets p when p - o is foreground, so the
  // pixel's east neighbor lights up.
  StructuringElement se(3, 1, {false, true, true});
  BinaryMask m(5, 1);
  m.set(2, 0, true);
  EXPECT_EQ(dilate(m, se), BinaryMask::from_rows({"..##."}));
  EXPECT_EQ(erode(BinaryMask::from_rows({"..##."}), se), BinaryMask::from_rows({"..#.."}));
}

TEST(Dilate, OfErodedSquareIsSubsetOfOriginal) {
  const auto se = StructuringElement::box(3);
  const auto square = filled_square_in(9, 2, 5);
  const auto opened = dilate(erode(square, se), se);
  EXPECT_TRUE(opened.subset_of(square));
  EXPECT_EQ(opened, square);  // a square is open under the box
}

TEST(Kernels, MatchDefinitionOracleOnRandomInputs) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_mask(rng, 32);
    const auto se = random_se(rng, 5);
    const auto want_e = testing::erode_oracle(m, se);
    const auto want_d = testing::dilate_oracle(m, se);
    ASSERT_EQ(erode(m, se), want_e) << "trial " << trial;
    ASSERT_EQ(serial::erode(m, se), want_e) << "trial " << trial;
    ASSERT_EQ(dilate(m, se), want_d) << "trial " << trial;
    ASSERT_EQ(serial::dilate(m, se), want_d) << "trial " << trial;
  }
}

TEST(Kernels, HandleKernelsWiderThanTheMask) {
  const auto se = StructuringElement::box(5);
  BinaryMask m(2, 3, true);
  EXPECT_EQ(erode(m, se), testing::erode_oracle(m, se));
  EXPECT_EQ(dilate(m, se), testing::dilate_oracle(m, se));
}

TEST(MorphologyLaws, HoldOnRandomPairs) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_mask(rng, 32);
    const auto se = random_se(rng, 5);
    const auto e = erode(m, se);
    const auto d = dilate(m, se);
    ASSERT_TRUE(e.subset_of(m));
    ASSERT_TRUE(m.subset_of(d));
    ASSERT_TRUE(dilate(e, se).subset_of(m));
    ASSERT_TRUE(testing::duality_holds_on_interior(m, se));

    BinaryMask bigger = m;
    for (auto& v : bigger.mutable_data()) v |= rng.bernoulli(0.2) ? 1 : 0;
    ASSERT_TRUE(e.subset_of(erode(bigger, se)));
    ASSERT_TRUE(d.subset_of(dilate(bigger, se)));
  }
}

TEST(Serial, MatchesParallelOnLargeMask) {
  Rng rng(5);
  const auto m = random_mask(rng, 300, 200, 0.7);
  for (auto se : {StructuringElement::box(3), StructuringElement::cross(7)}) {
    EXPECT_EQ(erode(m, se), serial::erode(m, se));
    EXPECT_EQ(dilate(m, se), serial::dilate(m, se));
  }
}

TEST(SeShapeNames, ParseAndPrint) {
  EXPECT_EQ(parse_se_shape("box"), SeShape::box);
  EXPECT_EQ(parse_se_shape("cross"), SeShape::cross);
  EXPECT_EQ(to_string(SeShape::cross), "cross");
  EXPECT_THROW((void)parse_se_shape("disk"), std::invalid_argument);
}

}  // namespace
}  // namespace logcount
