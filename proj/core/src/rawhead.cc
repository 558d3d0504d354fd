// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/rawhead.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow {
namespace {

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t GetU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

RawHeadOutput::RawHeadOutput(int rows, int cols, std::vector<float> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ < 5 || cols_ < 1) {
    throw Error(ErrorCode::kShape,
                fmt::format("raw head must have >= 5 rows and >= 1 column, got "
                            "{}x{}",
                            rows_, cols_));
  }
  if (data_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw Error(ErrorCode::kShape,
                fmt::format("raw head {}x{} needs {} values, got {}", rows_,
                            cols_, static_cast<std::size_t>(rows_) * cols_,
                            data_.size()));
  }
}

std::vector<std::uint8_t> EncodeRawHead(const RawHeadOutput& raw) {
  std::vector<std::uint8_t> out;
  out.reserve(kRawHeadHeaderSize + raw.data().size() * 4);
  out.insert(out.end(), std::begin(kRawHeadMagic), std::end(kRawHeadMagic));
  PutU32(out, static_cast<std::uint32_t>(raw.rows()));
  PutU32(out, static_cast<std::uint32_t>(raw.cols()));
  PutU32(out, 0);
  for (float f : raw.data()) PutU32(out, std::bit_cast<std::uint32_t>(f));
  return out;
}

RawHeadOutput DecodeRawHead(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kRawHeadHeaderSize ||
      std::memcmp(bytes.data(), kRawHeadMagic, 4) != 0) {
    throw Error(ErrorCode::kFormat, "not a rawhead tensor (bad magic)");
  }
  const std::uint32_t rows = GetU32(bytes.data() + 4);
  const std::uint32_t cols = GetU32(bytes.data() + 8);
  const std::uint64_t count = static_cast<std::uint64_t>(rows) * cols;
  if (rows > (1u << 20) || cols > (1u << 24) ||
      bytes.size() != kRawHeadHeaderSize + count * 4) {
    throw Error(ErrorCode::kFormat,
                fmt::format("rawhead size mismatch: header says {}x{}, payload "
                            "is {} bytes",
                            rows, cols, bytes.size() - kRawHeadHeaderSize));
  }
  std::vector<float> data(count);
  const std::uint8_t* p = bytes.data() + kRawHeadHeaderSize;
  for (std::size_t i = 0; i < count; ++i) {
    data[i] = std::bit_cast<float>(GetU32(p + 4 * i));
  }
  try {
    return RawHeadOutput(static_cast<int>(rows), static_cast<int>(cols),
                         std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
}

RawHeadOutput ReadRawHead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeRawHead(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteRawHead(const std::filesystem::path& path, const RawHeadOutput& raw) {
  const auto bytes = EncodeRawHead(raw);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace plateflow
