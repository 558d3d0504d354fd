// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/pipeline.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow {
namespace {

bool ReadsBefore(const CharacterObservation& a, const CharacterObservation& b) {
  if (a.x_center != b.x_center) return a.x_center < b.x_center;
  if (a.y_center() != b.y_center()) return a.y_center() < b.y_center();
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  return a.class_id < b.class_id;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::vector<std::vector<CharacterObservation>> SplitRows(
    std::vector<CharacterObservation> obs) {
  std::vector<double> heights;
  for (const auto& o : obs) heights.push_back(o.box.Height());
  const double gap = 0.5 * Median(std::move(heights));

  std::stable_sort(obs.begin(), obs.end(),
                   [](const auto& a, const auto& b) {
                     return a.y_center() < b.y_center();
                   });
  const double spread = obs.back().y_center() - obs.front().y_center();
  std::vector<std::vector<CharacterObservation>> rows(1);
  if (spread <= gap) {
    rows.front() = std::move(obs);
    return rows;
  }
  rows.front().push_back(obs.front());
  for (std::size_t i = 1; i < obs.size(); ++i) {
    if (obs[i].y_center() - obs[i - 1].y_center() > gap) rows.emplace_back();
    rows.back().push_back(obs[i]);
  }
  return rows;
}

}  // namespace

CharacterObservation CharacterObservation::FromDetection(
    const Detection& d, const ClassMap& classes) {
  if (d.class_id < 0 || static_cast<std::size_t>(d.class_id) >= classes.size()) {
    throw Error(ErrorCode::kShape,
                fmt::format("character class {} outside class map of {}",
                            d.class_id, classes.size()));
  }
  return {classes.name(d.class_id), d.class_id, d.box, d.box.CenterX(),
          d.confidence};
}

std::string CharacterKey(std::string_view image_key, std::size_t plate_index) {
  return fmt::format("{}__plate{}", image_key, plate_index);
}

std::vector<Detection> DetectPlates(const RgbImage& image,
                                    std::string_view image_key,
                                    DetectorBackend& backend,
                                    const PipelineConfig& cfg) {
  const PreprocessedInput input = Preprocess(image, cfg.input_size);
  const RawHeadOutput raw = backend.Infer(image_key, input);
  return PostprocessImage(raw, cfg.plate, input.transform);
}

PlateCrop CropPlate(const RgbImage& image, const BBox& plate, double pad_ratio) {
  if (!plate.HasPositiveArea()) {
    throw Error(ErrorCode::kInvalidArgument, "plate box has no area");
  }
  if (!(pad_ratio >= 0.0) || !std::isfinite(pad_ratio)) {
    throw Error(ErrorCode::kInvalidArgument, "pad ratio must be >= 0");
  }
  const double px = pad_ratio * plate.Width();
  const double py = pad_ratio * plate.Height();
  const int x0 = std::max(0, static_cast<int>(std::floor(plate.x1 - px)));
  const int y0 = std::max(0, static_cast<int>(std::floor(plate.y1 - py)));
  const int x1 = std::min(image.width, static_cast<int>(std::ceil(plate.x2 + px)));
  const int y1 = std::min(image.height, static_cast<int>(std::ceil(plate.y2 + py)));
  if (x1 <= x0 || y1 <= y0) {
    throw Error(ErrorCode::kInvalidArgument, "plate box lies outside the image");
  }
  return {CropImage(image, x0, y0, x1, y1), x0, y0};
}

std::vector<CharacterObservation> RecognizeCharacters(
    const RgbImage& crop, std::string_view crop_key, DetectorBackend& backend,
    const ClassMap& classes, const PipelineConfig& cfg) {
  const PreprocessedInput input = Preprocess(crop, cfg.input_size);
  const RawHeadOutput raw = backend.Infer(crop_key, input);
  const auto dets = PostprocessImage(raw, cfg.character, input.transform);
  std::vector<CharacterObservation> out;
  out.reserve(dets.size());
  for (const auto& d : dets) {
    out.push_back(CharacterObservation::FromDetection(d, classes));
  }
  return out;
}

std::vector<CharacterObservation> SequenceCharacters(
    std::span<const CharacterObservation> observations, bool cluster_rows) {
  std::vector<CharacterObservation> obs(observations.begin(),
                                        observations.end());
  if (!cluster_rows || obs.size() < 2) {
    std::stable_sort(obs.begin(), obs.end(), ReadsBefore);
    return obs;
  }
  std::vector<CharacterObservation> out;
  out.reserve(obs.size());
  for (auto& row : SplitRows(std::move(obs))) {
    std::stable_sort(row.begin(), row.end(), ReadsBefore);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::string AssembleText(std::span<const CharacterObservation> ordered) {
  std::string text;
  for (const auto& o : ordered) text += o.glyph;
  return text;
}

std::vector<PlateReading> ReadPlates(const RgbImage& image,
                                     std::string_view image_key,
                                     DetectorBackend& plate_backend,
                                     DetectorBackend& char_backend,
                                     const ClassMap& classes,
                                     const PipelineConfig& cfg) {
  const auto plates = DetectPlates(image, image_key, plate_backend, cfg);
  std::vector<PlateReading> readings;
  readings.reserve(plates.size());
  for (std::size_t i = 0; i < plates.size(); ++i) {
    try {
      const PlateCrop crop = CropPlate(image, plates[i].box, cfg.pad_ratio);
      const auto obs = RecognizeCharacters(
          crop.image, CharacterKey(image_key, i), char_backend, classes, cfg);
      PlateReading r;
      r.plate = plates[i];
      r.characters = SequenceCharacters(obs, cfg.cluster_rows);
      r.text = AssembleText(r.characters);
      readings.push_back(std::move(r));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("image '{}', plate {}: {}", image_key,
                                        i, e.what()));
    }
  }
  return readings;
}

}  // namespace plateflow
