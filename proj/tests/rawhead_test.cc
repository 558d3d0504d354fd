// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/rawhead.h"

#include <gtest/gtest.h>

#include <cstring>
#include <functional>
#include <limits>

#include "plateflow/error.h"
#include "test_support.h"

namespace plateflow {
namespace {

namespace fs = std::filesystem;

RawHeadOutput Sample() {
  std::vector<float> v(5 * 3);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.5f * static_cast<float>(i) - 1.25f;
  return RawHeadOutput(5, 3, v);
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(RawHead, ShapeIsValidated) {
  EXPECT_EQ(CodeOf([] { RawHeadOutput(4, 3, std::vector<float>(12)); }), ErrorCode::kShape);
  EXPECT_EQ(CodeOf([] { RawHeadOutput(5, 0, {}); }), ErrorCode::kShape);
  EXPECT_EQ(CodeOf([] { RawHeadOutput(5, 3, std::vector<float>(14)); }), ErrorCode::kShape);
  const RawHeadOutput r = Sample();
  EXPECT_EQ(r.num_classes(), 1);
  EXPECT_EQ(r.num_anchors(), 3);
  EXPECT_EQ(r.at(1, 2), 0.5f * 5 - 1.25f);
  EXPECT_EQ(r.row(4)[0], 0.5f * 12 - 1.25f);
}

TEST(RawHead, HeaderLayout) {
  const auto bytes = EncodeRawHead(Sample());
  ASSERT_EQ(bytes.size(), 16u + 4u * 15u);
  EXPECT_EQ(std::memcmp(bytes.data(), "RHD0", 4), 0);
  EXPECT_EQ(bytes[4], 5);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[8], 3);
  EXPECT_EQ(bytes[12] | bytes[13] | bytes[14] | bytes[15], 0);
  // First value -1.25f = 0xBFA00000, little-endian.
  EXPECT_EQ(bytes[16], 0x00);
  EXPECT_EQ(bytes[18], 0xA0);
  EXPECT_EQ(bytes[19], 0xBF);
}

TEST(RawHead, RoundTripIsBitExact) {
  std::vector<float> v(40 * 7);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<float>(i) / 7.0f;
  v[3] = std::numeric_limits<float>::denorm_min();
  v[4] = -0.0f;
  const RawHeadOutput r(40, 7, v);
  const RawHeadOutput back = DecodeRawHead(EncodeRawHead(r));
  ASSERT_EQ(back.rows(), 40);
  EXPECT_EQ(std::memcmp(back.data().data(), v.data(), v.size() * 4), 0);
}

TEST(RawHead, MalformedBytesAreFormatErrors) {
  auto bytes = EncodeRawHead(Sample());
  auto bad_magic = bytes;
  bad_magic[3] = '1';
  EXPECT_EQ(CodeOf([&] { DecodeRawHead(bad_magic); }), ErrorCode::kFormat);
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_EQ(CodeOf([&] { DecodeRawHead(truncated); }), ErrorCode::kFormat);
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_EQ(CodeOf([&] { DecodeRawHead(trailing); }), ErrorCode::kFormat);
  auto bad_rows = bytes;
  bad_rows[4] = 4;  // 4 x 3 would need fewer bytes, and 4 rows is too few
  EXPECT_EQ(CodeOf([&] { DecodeRawHead(bad_rows); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([&] { DecodeRawHead(std::vector<std::uint8_t>(8)); }),
            ErrorCode::kFormat);
}

TEST(RawHead, FileRoundTrip) {
  testing::TempDir dir;
  const fs::path p = dir / "t.rawhead";
  WriteRawHead(p, Sample());
  EXPECT_EQ(ReadRawHead(p), Sample());
  EXPECT_EQ(CodeOf([&] { ReadRawHead(dir / "missing.rawhead"); }), ErrorCode::kIo);
}

TEST(RawHead, EveryFixtureTensorCarriesMagic) {
  int count = 0;
  for (const auto& dir : {testing::FixtureDir() / "lpr" / "recorded",
                          testing::FixtureDir() / "crops"}) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.path().extension() != ".rawhead") continue;
      ++count;
      const std::string bytes = testing::ReadFile(e.path());
      ASSERT_GE(bytes.size(), 16u);
      EXPECT_EQ(bytes.substr(0, 4), "RHD0") << e.path();
      const RawHeadOutput r = ReadRawHead(e.path());
      EXPECT_TRUE(r.rows() == 5 || r.rows() == 40) << e.path();
    }
  }
  EXPECT_GE(count, 10);
}

}  // namespace
}  // namespace plateflow
