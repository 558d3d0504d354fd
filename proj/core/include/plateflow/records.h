// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented JSON records exchanged between commands. Every record is a
// single-line JSON object carrying a "schema" tag; floats are printed with
// six decimals.
//
//   plateflow/detections/1
//     {"schema", "image", "role", "width", "height",
//      "detections": [{"box": [x1,y1,x2,y2], "class_id", "class",
//                      "confidence"}]}
//
//   plateflow/reading/1
//     {"schema", "image", "width", "height",
//      "plates": [{"box", "confidence", "text",
//                  "characters": [{"glyph", "class_id", "box",
//                                  "confidence"}]}]}
//
// Plate boxes are source-image pixels; character boxes are plate-crop
// pixels.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plateflow/dataset.h"
#include "plateflow/pipeline.h"
#include "plateflow/postprocess.h"

namespace plateflow {

inline constexpr char kDetectionSchema[] = "plateflow/detections/1";
inline constexpr char kReadingSchema[] = "plateflow/reading/1";
inline constexpr char kReportSchema[] = "plateflow/report/1";
inline constexpr char kStatsSchema[] = "plateflow/stats/1";

struct ImageDetections {
  std::string image;
  std::string role = "plate";
  int width = 0;
  int height = 0;
  std::vector<Detection> detections;
};

struct ImageReadings {
  std::string image;
  int width = 0;
  int height = 0;
  std::vector<PlateReading> readings;
};

std::string DetectionRecordJson(const ImageDetections& rec,
                                const ClassMap& classes);
std::string ReadingRecordJson(const ImageReadings& rec);

// Throw Error(kFormat) on malformed JSON and Error(kSchema) on a missing
// tag or a schema other than the expected one.
ImageDetections ParseDetectionRecord(std::string_view line);
ImageReadings ParseReadingRecord(std::string_view line);

// Reads a JSON Lines file of detection or reading records (reading records
// contribute their plate detections as class 0). Blank lines are skipped.
std::map<std::string, std::vector<Detection>> LoadPredictions(
    const std::filesystem::path& path);

std::vector<ImageReadings> LoadReadings(const std::filesystem::path& path);

std::string DatasetStatsJson(const DatasetSplit& split,
                             const DatasetStats& stats,
                             const ClassMap* classes);

// Ground-truth plate strings, one plate per line:
//
//   <image-id> <text> [x1 y1 x2 y2]
//
// '#' starts a comment. Several lines may share an image id.
struct PlateTruth {
  std::string image;
  std::string text;
  std::optional<BBox> box;
};

std::vector<PlateTruth> ParsePlateTruth(std::string_view text);
std::vector<PlateTruth> LoadPlateTruth(const std::filesystem::path& path);

// Keyed strings ready for SequenceAccuracy.
struct SequencePairs {
  std::map<std::string, std::string> predicted;
  std::map<std::string, std::string> truth;
};

// Pairs readings with truth plates image by image. A truth plate's key is
// the image id when the image has one truth plate, else "<image>#<k>".
// When every truth plate of an image has a box, readings (rank order) take
// the unmatched truth plate of highest IoU if it is >= min_iou; otherwise
// the k-th reading pairs with the k-th truth line. Unpaired readings get
// "<image>#extra<j>" keys, which have no truth.
SequencePairs PairReadings(const std::vector<ImageReadings>& readings,
                           const std::vector<PlateTruth>& truth,
                           double min_iou = 0.5);

}  // namespace plateflow
