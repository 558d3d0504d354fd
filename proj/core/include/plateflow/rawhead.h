// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// `.rawhead` tensor files. Layout, all integers and floats little-endian:
//
//   offset  size  field
//   0       4     magic "RHD0"
//   4       4     u32 rows  (4 + num_classes)
//   8       4     u32 cols  (num_anchors)
//   12      4     u32 reserved, written as 0
//   16      4*rows*cols   f32 values, row-major
//
// The file size must be exactly 16 + 4 * rows * cols bytes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace plateflow {

// Anchor-free detector head output: rows 0-3 hold box cx, cy, w, h in model
// input pixels; row 4 + k holds the score of class k; one column per anchor.
class RawHeadOutput {
 public:
  RawHeadOutput() = default;

  // Throws Error(kShape) unless rows >= 5, cols >= 1 and the data size
  // matches.
  RawHeadOutput(int rows, int cols, std::vector<float> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_classes() const { return rows_ - 4; }
  int num_anchors() const { return cols_; }

  float at(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * cols_ + col];
  }
  std::span<const float> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  const std::vector<float>& data() const { return data_; }

  friend bool operator==(const RawHeadOutput&, const RawHeadOutput&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<float> data_;
};

inline constexpr char kRawHeadMagic[4] = {'R', 'H', 'D', '0'};
inline constexpr std::size_t kRawHeadHeaderSize = 16;

std::vector<std::uint8_t> EncodeRawHead(const RawHeadOutput& raw);
RawHeadOutput DecodeRawHead(std::span<const std::uint8_t> bytes);

RawHeadOutput ReadRawHead(const std::filesystem::path& path);
void WriteRawHead(const std::filesystem::path& path, const RawHeadOutput& raw);

}  // namespace plateflow
