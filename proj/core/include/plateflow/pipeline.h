// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Two-stage plate reading: detect plates on the full image, crop each plate,
// detect glyphs on the letterboxed crop, then order glyphs left to right.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plateflow/backend.h"
#include "plateflow/dataset.h"
#include "plateflow/image.h"
#include "plateflow/postprocess.h"

namespace plateflow {

struct CharacterObservation {
  std::string glyph;
  int class_id = 0;
  BBox box;  // plate-crop pixels
  double x_center = 0.0;
  double confidence = 0.0;

  double y_center() const { return box.CenterY(); }

  static CharacterObservation FromDetection(const Detection& d,
                                            const ClassMap& classes);
};

struct PlateReading {
  Detection plate;  // source-image pixels
  std::vector<CharacterObservation> characters;  // reading order
  std::string text;
};

struct PipelineConfig {
  PostprocessConfig plate{0.25, 0.45, NmsMode::kClassAware};
  PostprocessConfig character{0.25, 0.45, NmsMode::kClassAgnostic};
  double pad_ratio = 0.05;
  bool cluster_rows = false;
  int input_size = kModelInputSize;
};

struct PlateCrop {
  RgbImage image;
  int offset_x = 0;  // crop origin in the source image
  int offset_y = 0;
};

// Replay key of the i-th plate (rank order) of an image.
std::string CharacterKey(std::string_view image_key, std::size_t plate_index);

std::vector<Detection> DetectPlates(const RgbImage& image,
                                    std::string_view image_key,
                                    DetectorBackend& backend,
                                    const PipelineConfig& cfg);

// Expands the plate by pad_ratio of its width/height on each side, snaps
// outward to whole pixels and clamps to the image. Throws
// Error(kInvalidArgument) on a plate without positive area.
PlateCrop CropPlate(const RgbImage& image, const BBox& plate, double pad_ratio);

// Glyph detections on a crop, in rank order, boxes in crop pixels.
std::vector<CharacterObservation> RecognizeCharacters(
    const RgbImage& crop, std::string_view crop_key, DetectorBackend& backend,
    const ClassMap& classes, const PipelineConfig& cfg);

// Reading order: ascending x_center; ties by smaller y_center, then higher
// confidence, then lower class id. With `cluster_rows`, glyphs are first
// split into rows when their vertical spread exceeds half the median glyph
// height; rows are read top to bottom.
std::vector<CharacterObservation> SequenceCharacters(
    std::span<const CharacterObservation> observations,
    bool cluster_rows = false);

std::string AssembleText(std::span<const CharacterObservation> ordered);

// Full cascade. Readings follow plate rank order. An error on any plate is
// rethrown with the image key and plate index prepended.
std::vector<PlateReading> ReadPlates(const RgbImage& image,
                                     std::string_view image_key,
                                     DetectorBackend& plate_backend,
                                     DetectorBackend& char_backend,
                                     const ClassMap& classes,
                                     const PipelineConfig& cfg);

}  // namespace plateflow
