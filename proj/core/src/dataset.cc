// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "plateflow/error.h"
#include "plateflow/image.h"
#include "plateflow/parallel.h"

namespace fs = std::filesystem;

namespace plateflow {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool ParseWhole(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void CheckPreset(std::size_t count, ClassPreset preset) {
  std::size_t expected = 0;
  switch (preset) {
    case ClassPreset::kNone:
      return;
    case ClassPreset::kPlate:
      expected = 1;
      break;
    case ClassPreset::kCharacters:
      expected = 36;
      break;
  }
  if (count != expected) {
    throw ParseError(ParseError::Kind::kCountMismatch, 0,
                     fmt::format("class manifest has {} names, expected {}",
                                 count, expected));
  }
}

Quantiles ComputeQuantiles(std::vector<double> v) {
  Quantiles q;
  if (v.empty()) return q;
  std::sort(v.begin(), v.end());
  // Linear interpolation between closest ranks.
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (v[hi] - v[lo]) * (pos - static_cast<double>(lo));
  };
  q.min = v.front();
  q.q25 = at(0.25);
  q.median = at(0.5);
  q.q75 = at(0.75);
  q.max = v.back();
  return q;
}

}  // namespace

ClassMap ClassMap::Create(std::vector<std::string> names, ClassPreset preset) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw ParseError(ParseError::Kind::kEmptyName, 0,
                       fmt::format("class {} has an empty name", i));
    }
    if (!seen.insert(names[i]).second) {
      throw ParseError(ParseError::Kind::kDuplicateName, 0,
                       fmt::format("duplicate class name '{}'", names[i]));
    }
  }
  CheckPreset(names.size(), preset);
  return ClassMap(std::move(names));
}

ClassMap ClassMap::Plate() { return ClassMap({"plate"}); }

ClassMap ClassMap::Characters() {
  std::vector<std::string> names;
  for (char c = '0'; c <= '9'; ++c) names.emplace_back(1, c);
  for (char c = 'A'; c <= 'Z'; ++c) names.emplace_back(1, c);
  return ClassMap(std::move(names));
}

std::optional<int> ClassMap::Find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

ClassMap ParseClassMap(std::string_view yaml_text, ClassPreset preset) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ParseError(ParseError::Kind::kSyntax, e.mark.line + 1, e.msg);
  }
  if (!root.IsMap() || !root["names"]) {
    throw ParseError(ParseError::Kind::kSyntax, 0,
                     "class manifest has no 'names' entry");
  }
  const YAML::Node names_node = root["names"];
  std::vector<std::string> names;
  try {
    if (names_node.IsSequence()) {
      for (const auto& n : names_node) {
        names.push_back(n.IsNull() ? std::string() : n.as<std::string>());
      }
    } else if (names_node.IsMap()) {
      std::map<int, std::string> by_id;
      for (const auto& kv : names_node) {
        by_id[kv.first.as<int>()] =
            kv.second.IsNull() ? std::string() : kv.second.as<std::string>();
      }
      int expected = 0;
      for (const auto& [id, name] : by_id) {
        if (id != expected++) {
          throw ParseError(ParseError::Kind::kSyntax, 0,
                           "class ids in 'names' must be 0..n-1");
        }
        names.push_back(name);
      }
    } else {
      throw ParseError(ParseError::Kind::kSyntax, 0,
                       "'names' must be a list or an id -> name map");
    }
    if (root["nc"] && root["nc"].as<std::size_t>() != names.size()) {
      throw ParseError(ParseError::Kind::kCountMismatch, 0,
                       "'nc' does not match the number of names");
    }
  } catch (const YAML::Exception& e) {
    throw ParseError(ParseError::Kind::kSyntax, e.mark.line + 1, e.msg);
  }
  return ClassMap::Create(std::move(names), preset);
}

ClassMap LoadClassMap(const fs::path& manifest, ClassPreset preset) {
  const std::string text = ReadFile(manifest);
  try {
    return ParseClassMap(text, preset);
  } catch (const ParseError& e) {
    throw ParseError(e, manifest.string());
  }
}

std::string FormatClassMap(const ClassMap& classes) {
  std::string out = fmt::format("nc: {}\nnames:\n", classes.size());
  for (const auto& n : classes.names()) out += fmt::format("  - '{}'\n", n);
  return out;
}

GroundTruthAnnotation ParseLabelLine(std::string_view text, std::size_t line_no,
                                     std::optional<std::size_t> num_classes) {
  using Kind = ParseError::Kind;
  const auto tokens = SplitWhitespace(text);
  if (tokens.size() != 5) {
    throw ParseError(Kind::kTokenCount, line_no,
                     fmt::format("expected 5 fields, got {}", tokens.size()));
  }
  long long cls = 0;
  if (!ParseWhole(tokens[0], cls)) {
    throw ParseError(Kind::kNotNumeric, line_no,
                     fmt::format("class id '{}' is not an integer", tokens[0]));
  }
  if (cls < 0) {
    throw ParseError(Kind::kNegativeClass, line_no,
                     fmt::format("negative class id {}", cls));
  }
  if (num_classes && static_cast<unsigned long long>(cls) >= *num_classes) {
    throw ParseError(Kind::kClassOutOfRange, line_no,
                     fmt::format("class id {} outside class map of {}", cls,
                                 *num_classes));
  }
  static constexpr const char* kFieldNames[] = {"cx", "cy", "width", "height"};
  double v[4];
  for (int i = 0; i < 4; ++i) {
    if (!ParseWhole(tokens[i + 1], v[i])) {
      throw ParseError(Kind::kNotNumeric, line_no,
                       fmt::format("{} '{}' is not a number", kFieldNames[i],
                                   tokens[i + 1]));
    }
  }
  GroundTruthAnnotation a{static_cast<int>(cls), {v[0], v[1], v[2], v[3]}};
  for (int i = 0; i < 4; ++i) {
    const bool size_field = i >= 2;
    const bool ok = std::isfinite(v[i]) && v[i] <= 1.0 &&
                    (size_field ? v[i] > 0.0 : v[i] >= 0.0);
    if (!ok) {
      throw ParseError(
          Kind::kOutOfRange, line_no,
          v[i] == 0.0 && size_field
              ? fmt::format("zero {}", kFieldNames[i])
              : fmt::format("{} {} outside {}", kFieldNames[i], tokens[i + 1],
                            size_field ? "(0, 1]" : "[0, 1]"));
    }
  }
  return a;
}

std::string FormatLabelLine(const GroundTruthAnnotation& a) {
  return fmt::format("{} {:.6f} {:.6f} {:.6f} {:.6f}", a.class_id, a.box.cx,
                     a.box.cy, a.box.w, a.box.h);
}

std::vector<GroundTruthAnnotation> ParseLabelFile(
    std::string_view text, std::optional<std::size_t> num_classes) {
  std::vector<GroundTruthAnnotation> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (SplitWhitespace(line).empty()) continue;
    out.push_back(ParseLabelLine(line, line_no, num_classes));
  }
  return out;
}

bool IsImageFile(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".jpg" || ext == ".jpeg" || ext == ".png" || ext == ".bmp";
}

std::vector<fs::path> ListImages(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "missing directory: " + dir.string());
  }
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_directory() && IsImageFile(e.path())) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return out;
}

DatasetSplit LoadSplit(const fs::path& root, const std::string& split,
                       const ClassMap* classes, int workers) {
  const fs::path images_dir = root / split / "images";
  const fs::path labels_dir = root / split / "labels";
  const auto images = ListImages(images_dir);

  std::optional<std::size_t> num_classes;
  if (classes != nullptr) num_classes = classes->size();

  DatasetSplit out;
  out.name = split;
  out.entries.resize(images.size());
  ParallelFor(images.size(), workers, [&](std::size_t i) {
    DatasetEntry& e = out.entries[i];
    e.id = images[i].stem().string();
    e.image_path = images[i];
    const ImageSize size = ReadImageSize(images[i]);
    e.width = size.width;
    e.height = size.height;
    const fs::path label = labels_dir / (e.id + ".txt");
    if (!fs::exists(label)) return;
    try {
      e.annotations = ParseLabelFile(ReadFile(label), num_classes);
    } catch (const ParseError& err) {
      throw ParseError(err, label.string());
    }
  });

  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    if (out.entries[i].id == out.entries[i - 1].id) {
      throw Error(ErrorCode::kFormat,
                  "two images share the stem '" + out.entries[i].id + "'");
    }
  }
  return out;
}

DatasetStats ComputeStats(const DatasetSplit& split) {
  DatasetStats s;
  s.images = split.entries.size();
  std::vector<double> widths;
  std::vector<double> heights;
  for (const auto& e : split.entries) {
    if (e.annotations.empty()) ++s.empty_images;
    for (const auto& a : e.annotations) {
      ++s.annotations;
      ++s.per_class[a.class_id];
      widths.push_back(a.box.w);
      heights.push_back(a.box.h);
    }
  }
  s.box_width = ComputeQuantiles(std::move(widths));
  s.box_height = ComputeQuantiles(std::move(heights));
  return s;
}

}  // namespace plateflow
