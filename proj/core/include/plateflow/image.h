// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace plateflow {

// Interleaved 8-bit RGB raster, row-major.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 3

  RgbImage() = default;
  RgbImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, fill) {}

  bool empty() const { return width <= 0 || height <= 0; }

  std::uint8_t* at(int x, int y) {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
};

// Decodes any format the image codecs support. Throws Error(kIo) when the
// file is missing or undecodable.
RgbImage LoadImage(const std::filesystem::path& path);

void SaveImage(const std::filesystem::path& path, const RgbImage& image);

struct ImageSize {
  int width = 0;
  int height = 0;
};

// Decodes the file and returns its dimensions.
ImageSize ReadImageSize(const std::filesystem::path& path);

// Copies the pixel rectangle [x0, x1) x [y0, y1), which must lie inside the
// image.
RgbImage CropImage(const RgbImage& image, int x0, int y0, int x1, int y1);

// Bilinear resize.
RgbImage ResizeImage(const RgbImage& image, int width, int height);

}  // namespace plateflow
