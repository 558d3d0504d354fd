// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// YOLO-format detection datasets:
//
//   <root>/<split>/images/<stem>.{jpg,jpeg,png,bmp}
//   <root>/<split>/labels/<stem>.txt     one "class cx cy w h" per line
//
// Images without a label file are negatives with no annotations.

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plateflow/geometry.h"

namespace plateflow {

enum class ClassPreset {
  kNone,
  kPlate,       // exactly one class
  kCharacters,  // exactly 36 classes
};

// Ordered class names; the index is the class id.
class ClassMap {
 public:
  ClassMap() = default;

  // Throws ParseError on empty or duplicate names, or when `preset` fixes a
  // count that `names` does not have.
  static ClassMap Create(std::vector<std::string> names,
                         ClassPreset preset = ClassPreset::kNone);

  // {"plate"}.
  static ClassMap Plate();
  // "0".."9" as ids 0-9, then "A".."Z" as ids 10-35.
  static ClassMap Characters();

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> Find(std::string_view name) const;

 private:
  explicit ClassMap(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

// Reads a YAML manifest with a `names:` entry, either a sequence or an
// index -> name mapping. An `nc:` entry, when present, must agree.
ClassMap LoadClassMap(const std::filesystem::path& manifest,
                      ClassPreset preset = ClassPreset::kNone);
ClassMap ParseClassMap(std::string_view yaml_text,
                       ClassPreset preset = ClassPreset::kNone);
std::string FormatClassMap(const ClassMap& classes);

struct GroundTruthAnnotation {
  int class_id = 0;
  NormBox box;

  friend bool operator==(const GroundTruthAnnotation&,
                         const GroundTruthAnnotation&) = default;
};

// Parses one label line. `line_no` is only used for error messages.
// With `num_classes`, ids >= num_classes are rejected.
GroundTruthAnnotation ParseLabelLine(std::string_view text,
                                     std::size_t line_no = 0,
                                     std::optional<std::size_t> num_classes = {});

// "class cx cy w h" with six fixed decimals, no trailing newline.
std::string FormatLabelLine(const GroundTruthAnnotation& a);

// Parses a whole label file body. Blank lines are skipped.
std::vector<GroundTruthAnnotation> ParseLabelFile(
    std::string_view text, std::optional<std::size_t> num_classes = {});

struct DatasetEntry {
  std::string id;  // image file stem
  std::filesystem::path image_path;
  int width = 0;
  int height = 0;
  std::vector<GroundTruthAnnotation> annotations;
};

struct DatasetSplit {
  std::string name;
  std::vector<DatasetEntry> entries;  // sorted by id
};

bool IsImageFile(const std::filesystem::path& p);

// Lists image files directly under `dir`, sorted by file name.
std::vector<std::filesystem::path> ListImages(const std::filesystem::path& dir);

// Loads `<root>/<split>`. Without `classes` any non-negative class id is
// accepted. Files are read on up to `workers` threads; the result does not
// depend on the worker count.
DatasetSplit LoadSplit(const std::filesystem::path& root,
                       const std::string& split,
                       const ClassMap* classes = nullptr, int workers = 1);

struct Quantiles {
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
};

struct DatasetStats {
  std::size_t images = 0;
  std::size_t annotations = 0;
  std::size_t empty_images = 0;
  std::map<int, std::size_t> per_class;
  // Normalized box width/height distributions.
  Quantiles box_width;
  Quantiles box_height;
};

DatasetStats ComputeStats(const DatasetSplit& split);

}  // namespace plateflow
