// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/geometry.h"

#include <gtest/gtest.h>

#include <random>

#include "plateflow/error.h"
#include "oracles.h"
#include "test_support.h"

namespace plateflow {
namespace {

using testing::RandomBox;

TEST(IoU, IdenticalBoxesGiveOne) {
  EXPECT_DOUBLE_EQ(IoU({0, 0, 10, 10}, {0, 0, 10, 10}), 1.0);
}

TEST(IoU, DisjointBoxesGiveZero) {
  EXPECT_EQ(IoU({0, 0, 10, 10}, {20, 20, 30, 30}), 0.0);
}

TEST(IoU, HalfShiftedBox) {
  // inter 5*10 = 50, union 100 + 100 - 50 = 150
  EXPECT_NEAR(IoU({0, 0, 10, 10}, {5, 0, 15, 10}), 50.0 / 150.0, 1e-15);
}

TEST(IoU, TouchingEdgesAndDegenerateBoxes) {
  EXPECT_EQ(IoU({0, 0, 10, 10}, {10, 0, 20, 10}), 0.0);
  EXPECT_EQ(IoU({5, 5, 5, 5}, {5, 5, 5, 5}), 0.0);
  EXPECT_EQ(IoU({0, 0, 0, 10}, {0, 0, 10, 10}), 0.0);
}

TEST(IoU, NestedBox) {
  EXPECT_NEAR(IoU({0, 0, 10, 10}, {2, 2, 7, 7}), 25.0 / 100.0, 1e-15);
}

TEST(IoU, RandomPropertiesAgainstOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const BBox a = RandomBox(rng, 100, 80, 0.5);
    const BBox b = RandomBox(rng, 100, 80, 0.5);
    const double ab = IoU(a, b);
    EXPECT_EQ(ab, IoU(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(ab, oracle::IoU(a, b), 1e-12);
    EXPECT_DOUBLE_EQ(IoU(a, a), 1.0);
  }
}

TEST(NormToPixels, FullFrame) {
  EXPECT_EQ(NormToPixels({0.5, 0.5, 1, 1}, 640, 640), (BBox{0, 0, 640, 640}));
}

TEST(NormToPixels, CentredHalfBox) {
  EXPECT_EQ(NormToPixels({0.5, 0.5, 0.5, 0.5}, 640, 640), (BBox{160, 160, 480, 480}));
}

TEST(NormToPixels, ClampsAtBoundary) {
  const BBox b = NormToPixels({0.05, 0.5, 0.2, 0.2}, 100, 100);
  EXPECT_EQ(b.x1, 0.0);
  EXPECT_NEAR(b.x2, 15.0, 1e-12);
  EXPECT_NEAR(b.y1, 40.0, 1e-12);
  EXPECT_NEAR(b.y2, 60.0, 1e-12);
}

TEST(NormToPixels, RoundTripsThroughPixelsToNorm) {
  const NormBox n{0.3, 0.6, 0.2, 0.1};
  const NormBox back = PixelsToNorm(NormToPixels(n, 1280, 720), 1280, 720);
  EXPECT_NEAR(back.cx, n.cx, 1e-12);
  EXPECT_NEAR(back.cy, n.cy, 1e-12);
  EXPECT_NEAR(back.w, n.w, 1e-12);
  EXPECT_NEAR(back.h, n.h, 1e-12);
}

TEST(PlanLetterbox, SquareSourceIsIdentity) {
  const auto t = PlanLetterbox(640, 640, 640);
  EXPECT_EQ(t.scale, 1.0);
  EXPECT_EQ(t.pad_x, 0.0);
  EXPECT_EQ(t.pad_y, 0.0);
}

TEST(PlanLetterbox, WideSourcePadsTopAndBottom) {
  const auto t = PlanLetterbox(1280, 640, 640);
  EXPECT_EQ(t.scale, 0.5);
  EXPECT_EQ(t.pad_x, 0.0);
  EXPECT_EQ(t.pad_y, 160.0);
}

TEST(PlanLetterbox, TallSourcePadsLeftAndRight) {
  const auto t = PlanLetterbox(320, 640, 640);
  EXPECT_EQ(t.scale, 1.0);
  EXPECT_EQ(t.pad_x, 160.0);
  EXPECT_EQ(t.pad_y, 0.0);
}

TEST(PlanLetterbox, ScaledContentFitsTheDestination) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> side(1, 4000);
  for (int i = 0; i < 2000; ++i) {
    const int w = side(rng);
    const int h = side(rng);
    const auto t = PlanLetterbox(w, h, 640);
    ASSERT_TRUE(t.IsValid());
    EXPECT_LE(t.scale * w, 640.0 + 1e-9);
    EXPECT_LE(t.scale * h, 640.0 + 1e-9);
    // One side fills the destination exactly.
    EXPECT_NEAR(std::max(t.scale * w, t.scale * h), 640.0, 1e-9);
    EXPECT_NEAR(2 * t.pad_x + t.scale * w, 640.0, 1e-9);
    EXPECT_NEAR(2 * t.pad_y + t.scale * h, 640.0, 1e-9);
  }
}

TEST(PlanLetterbox, RejectsNonPositiveSizes) {
  EXPECT_THROW(PlanLetterbox(0, 10, 640), Error);
  EXPECT_THROW(PlanLetterbox(10, 10, -1), Error);
}

TEST(UnmapBox, IdentityTransformLeavesBoxUnchanged) {
  const auto t = PlanLetterbox(640, 640, 640);
  const BBox b{12.5, 30, 100.25, 200};
  EXPECT_EQ(UnmapBox(b, t), b);
  EXPECT_EQ(MapBox(b, t), b);
}

TEST(UnmapBox, InvertsScaleAndPad) {
  const auto t = PlanLetterbox(1280, 640, 640);
  EXPECT_EQ(UnmapBox({0, 160, 640, 480}, t), (BBox{0, 0, 1280, 640}));
}

TEST(UnmapBox, ClampsToSource) {
  const auto t = PlanLetterbox(1280, 640, 640);
  EXPECT_EQ(UnmapBox({-10, 100, 650, 500}, t), (BBox{0, 0, 1280, 640}));
}

TEST(UnmapBox, RoundTripWithinMicroPixel) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> side(16, 3000);
  for (int i = 0; i < 10000; ++i) {
    const int w = side(rng);
    const int h = side(rng);
    const auto t = PlanLetterbox(w, h, 640);
    const BBox b = RandomBox(rng, w, h, 0.1);
    const BBox r = UnmapBox(MapBox(b, t), t);
    ASSERT_NEAR(r.x1, b.x1, 1e-6);
    ASSERT_NEAR(r.y1, b.y1, 1e-6);
    ASSERT_NEAR(r.x2, b.x2, 1e-6);
    ASSERT_NEAR(r.y2, b.y2, 1e-6);
  }
}

TEST(ClampBox, ClipsEachSide) {
  EXPECT_EQ(ClampBox({-5, -5, 15, 25}, 10, 20), (BBox{0, 0, 10, 20}));
}

TEST(NormBox, Validity) {
  EXPECT_TRUE((NormBox{0.5, 0.5, 1, 1}).IsValid());
  EXPECT_FALSE((NormBox{0.5, 0.5, 0, 0.1}).IsValid());
  EXPECT_FALSE((NormBox{1.2, 0.5, 0.1, 0.1}).IsValid());
}

}  // namespace
}  // namespace plateflow
