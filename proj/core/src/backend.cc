// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/backend.h"

#include <cmath>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace fs = std::filesystem;

namespace plateflow {

ModelDescriptor ModelDescriptor::Plate(std::string variant) {
  return {ModelRole::kPlate, 1, kModelInputSize, std::move(variant)};
}

ModelDescriptor ModelDescriptor::Character(std::string variant) {
  return {ModelRole::kCharacter, 36, kModelInputSize, std::move(variant)};
}

void ModelDescriptor::Validate() const {
  const int expected = role == ModelRole::kPlate ? 1 : 36;
  if (num_classes != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} model must have {} classes, descriptor says {}",
                            ModelRoleName(role), expected, num_classes));
  }
  if (input_size <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "model input size must be > 0");
  }
}

const char* ModelRoleName(ModelRole role) {
  return role == ModelRole::kPlate ? "plate" : "character";
}

PreprocessedInput Preprocess(const RgbImage& image, int input_size) {
  if (image.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot preprocess an empty image");
  }
  PreprocessedInput out;
  out.size = input_size;
  out.transform = PlanLetterbox(image.width, image.height, input_size);
  const auto& t = out.transform;

  const int new_w = std::clamp(
      static_cast<int>(std::lround(image.width * t.scale)), 1, input_size);
  const int new_h = std::clamp(
      static_cast<int>(std::lround(image.height * t.scale)), 1, input_size);
  const int left = std::clamp(static_cast<int>(std::lround(t.pad_x - 0.1)), 0,
                              input_size - new_w);
  const int top = std::clamp(static_cast<int>(std::lround(t.pad_y - 0.1)), 0,
                             input_size - new_h);
  const RgbImage resized = ResizeImage(image, new_w, new_h);

  const std::size_t plane = static_cast<std::size_t>(input_size) * input_size;
  out.chw.assign(3 * plane, kLetterboxPadValue / 255.0f);
  for (int y = 0; y < new_h; ++y) {
    for (int x = 0; x < new_w; ++x) {
      const std::uint8_t* px = resized.at(x, y);
      const std::size_t offset =
          static_cast<std::size_t>(y + top) * input_size + (x + left);
      for (int c = 0; c < 3; ++c) {
        out.chw[c * plane + offset] = px[c] / 255.0f;
      }
    }
  }
  return out;
}

RecordedBackend::RecordedBackend(const fs::path& dir,
                                 std::optional<ModelDescriptor> descriptor)
    : dir_(dir), descriptor_(std::move(descriptor)) {
  if (!fs::is_directory(dir_)) {
    throw Error(ErrorCode::kIo, "fixture directory not found: " + dir_.string());
  }
  if (descriptor_) descriptor_->Validate();
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == kRawHeadExtension) {
      index_.emplace(e.path().stem().string(), e.path());
    }
  }
}

RawHeadOutput RecordedBackend::Infer(std::string_view key,
                                     const PreprocessedInput& /*input*/) {
  const auto it = index_.find(key);
  if (it == index_.end()) {
    throw Error(ErrorCode::kNotFound,
                fmt::format("no recorded tensor for key '{}' in {}", key,
                            dir_.string()));
  }
  RawHeadOutput raw = ReadRawHead(it->second);
  if (descriptor_ && raw.rows() != descriptor_->expected_rows()) {
    throw Error(ErrorCode::kShape,
                fmt::format("recorded tensor '{}' has {} rows, {} model "
                            "expects {}",
                            key, raw.rows(), ModelRoleName(descriptor_->role),
                            descriptor_->expected_rows()));
  }
  return raw;
}

bool RecordedBackend::Has(std::string_view key) const {
  return index_.find(key) != index_.end();
}

std::vector<std::string> RecordedBackend::Keys() const {
  std::vector<std::string> keys;
  keys.reserve(index_.size());
  for (const auto& [k, _] : index_) keys.push_back(k);
  return keys;
}

}  // namespace plateflow
