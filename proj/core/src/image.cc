// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/image.h"

#include <cstring>
#include <string>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "plateflow/error.h"

namespace plateflow {
namespace {

RgbImage FromBgrMat(const cv::Mat& bgr) {
  cv::Mat rgb;
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  RgbImage out(rgb.cols, rgb.rows);
  for (int y = 0; y < rgb.rows; ++y) {
    std::memcpy(out.at(0, y), rgb.ptr<std::uint8_t>(y),
                static_cast<std::size_t>(rgb.cols) * 3);
  }
  return out;
}

cv::Mat WrapRgb(const RgbImage& image) {
  // cv::Mat does not take const data; callers must not write through it.
  return cv::Mat(image.height, image.width, CV_8UC3,
                 const_cast<std::uint8_t*>(image.pixels.data()));
}

cv::Mat ReadBgr(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::kIo, "image not found: " + path.string());
  }
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) {
    throw Error(ErrorCode::kIo, "cannot decode image: " + path.string());
  }
  return bgr;
}

}  // namespace

RgbImage LoadImage(const std::filesystem::path& path) {
  return FromBgrMat(ReadBgr(path));
}

ImageSize ReadImageSize(const std::filesystem::path& path) {
  const cv::Mat bgr = ReadBgr(path);
  return {bgr.cols, bgr.rows};
}

void SaveImage(const std::filesystem::path& path, const RgbImage& image) {
  cv::Mat bgr;
  cv::cvtColor(WrapRgb(image), bgr, cv::COLOR_RGB2BGR);
  if (!cv::imwrite(path.string(), bgr)) {
    throw Error(ErrorCode::kIo, "cannot write image: " + path.string());
  }
}

RgbImage CropImage(const RgbImage& image, int x0, int y0, int x1, int y1) {
  if (x0 < 0 || y0 < 0 || x1 > image.width || y1 > image.height || x1 <= x0 ||
      y1 <= y0) {
    throw Error(ErrorCode::kInvalidArgument, "crop rectangle outside image");
  }
  RgbImage out(x1 - x0, y1 - y0);
  for (int y = y0; y < y1; ++y) {
    std::memcpy(out.at(0, y - y0), image.at(x0, y),
                static_cast<std::size_t>(out.width) * 3);
  }
  return out;
}

RgbImage ResizeImage(const RgbImage& image, int width, int height) {
  if (width == image.width && height == image.height) return image;
  RgbImage out(width, height);
  cv::Mat dst(height, width, CV_8UC3, out.pixels.data());
  cv::resize(WrapRgb(image), dst, cv::Size(width, height), 0, 0,
             cv::INTER_LINEAR);
  return out;
}

}  // namespace plateflow
