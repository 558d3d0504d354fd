// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/records.h"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json_fixed.h"
#include "plateflow/error.h"

namespace fs = std::filesystem;

namespace plateflow {

using internal::DumpFixed;
using internal::Json;

namespace {

Json BoxJson(const BBox& b) { return Json::array({b.x1, b.y1, b.x2, b.y2}); }

BBox BoxFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorCode::kFormat, "box must be [x1, y1, x2, y2]");
  }
  BBox b{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
         j[3].get<double>()};
  if (!b.IsValid()) throw Error(ErrorCode::kFormat, "box has x2 < x1 or y2 < y1");
  return b;
}

Json ParseRecord(std::string_view line, const char* schema) {
  Json j = internal::ParseJson(std::string(line), "bad record");
  if (!j.is_object() || !j.contains("schema")) {
    throw Error(ErrorCode::kSchema, "record has no schema tag");
  }
  const std::string got = j["schema"].get<std::string>();
  if (got != schema) {
    throw Error(ErrorCode::kSchema,
                fmt::format("unsupported schema '{}', expected '{}'", got, schema));
  }
  return j;
}

template <typename Fn>
void ForEachLine(const fs::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(line);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kFormat, fmt::format("{}:{}: {}", path.string(),
                                                  line_no, e.what()));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}:{}: {}", path.string(), line_no,
                                        e.what()));
    }
  }
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json QuantilesJson(const Quantiles& q) {
  Json j = Json::object();
  j["min"] = q.min;
  j["q25"] = q.q25;
  j["median"] = q.median;
  j["q75"] = q.q75;
  j["max"] = q.max;
  return j;
}

}  // namespace

std::string DetectionRecordJson(const ImageDetections& rec,
                                const ClassMap& classes) {
  Json j = Json::object();
  j["schema"] = kDetectionSchema;
  j["image"] = rec.image;
  j["role"] = rec.role;
  j["width"] = rec.width;
  j["height"] = rec.height;
  Json dets = Json::array();
  for (const auto& d : rec.detections) {
    Json o = Json::object();
    o["box"] = BoxJson(d.box);
    o["class_id"] = d.class_id;
    if (d.class_id >= 0 && static_cast<std::size_t>(d.class_id) < classes.size()) {
      o["class"] = classes.name(d.class_id);
    }
    o["confidence"] = d.confidence;
    dets.push_back(std::move(o));
  }
  j["detections"] = std::move(dets);
  return DumpFixed(j);
}

std::string ReadingRecordJson(const ImageReadings& rec) {
  Json j = Json::object();
  j["schema"] = kReadingSchema;
  j["image"] = rec.image;
  j["width"] = rec.width;
  j["height"] = rec.height;
  Json plates = Json::array();
  for (const auto& r : rec.readings) {
    Json p = Json::object();
    p["box"] = BoxJson(r.plate.box);
    p["confidence"] = r.plate.confidence;
    p["text"] = r.text;
    Json chars = Json::array();
    for (const auto& c : r.characters) {
      Json o = Json::object();
      o["glyph"] = c.glyph;
      o["class_id"] = c.class_id;
      o["box"] = BoxJson(c.box);
      o["confidence"] = c.confidence;
      chars.push_back(std::move(o));
    }
    p["characters"] = std::move(chars);
    plates.push_back(std::move(p));
  }
  j["plates"] = std::move(plates);
  return DumpFixed(j);
}

ImageDetections ParseDetectionRecord(std::string_view line) {
  const Json j = ParseRecord(line, kDetectionSchema);
  ImageDetections rec;
  rec.image = j.at("image").get<std::string>();
  rec.role = j.value("role", std::string("plate"));
  rec.width = j.value("width", 0);
  rec.height = j.value("height", 0);
  for (const auto& o : j.at("detections")) {
    rec.detections.push_back({BoxFromJson(o.at("box")), o.at("class_id").get<int>(),
                              o.at("confidence").get<double>()});
  }
  return rec;
}

ImageReadings ParseReadingRecord(std::string_view line) {
  const Json j = ParseRecord(line, kReadingSchema);
  ImageReadings rec;
  rec.image = j.at("image").get<std::string>();
  rec.width = j.value("width", 0);
  rec.height = j.value("height", 0);
  for (const auto& p : j.at("plates")) {
    PlateReading r;
    r.plate = {BoxFromJson(p.at("box")), 0, p.at("confidence").get<double>()};
    r.text = p.at("text").get<std::string>();
    for (const auto& o : p.at("characters")) {
      CharacterObservation c;
      c.glyph = o.at("glyph").get<std::string>();
      c.class_id = o.at("class_id").get<int>();
      c.box = BoxFromJson(o.at("box"));
      c.x_center = c.box.CenterX();
      c.confidence = o.at("confidence").get<double>();
      r.characters.push_back(std::move(c));
    }
    rec.readings.push_back(std::move(r));
  }
  return rec;
}

std::map<std::string, std::vector<Detection>> LoadPredictions(
    const fs::path& path) {
  std::map<std::string, std::vector<Detection>> out;
  ForEachLine(path, [&](const std::string& line) {
    const Json probe = internal::ParseJson(line, "bad record");
    const std::string schema =
        probe.is_object() ? probe.value("schema", std::string()) : std::string();
    std::string image;
    std::vector<Detection> dets;
    if (schema == kDetectionSchema) {
      auto rec = ParseDetectionRecord(line);
      image = std::move(rec.image);
      dets = std::move(rec.detections);
    } else if (schema == kReadingSchema) {
      auto rec = ParseReadingRecord(line);
      image = std::move(rec.image);
      for (const auto& r : rec.readings) dets.push_back(r.plate);
    } else {
      throw Error(ErrorCode::kSchema,
                  fmt::format("unsupported schema '{}', expected '{}' or '{}'",
                              schema, kDetectionSchema, kReadingSchema));
    }
    auto& slot = out[image];
    slot.insert(slot.end(), dets.begin(), dets.end());
  });
  return out;
}

std::vector<ImageReadings> LoadReadings(const fs::path& path) {
  std::vector<ImageReadings> out;
  ForEachLine(path, [&](const std::string& line) {
    out.push_back(ParseReadingRecord(line));
  });
  return out;
}

std::string DatasetStatsJson(const DatasetSplit& split,
                             const DatasetStats& stats,
                             const ClassMap* classes) {
  Json j = Json::object();
  j["schema"] = kStatsSchema;
  j["split"] = split.name;
  j["images"] = stats.images;
  j["annotations"] = stats.annotations;
  j["empty_images"] = stats.empty_images;
  Json per_class = Json::array();
  for (const auto& [cls, count] : stats.per_class) {
    Json o = Json::object();
    o["class_id"] = cls;
    if (classes && static_cast<std::size_t>(cls) < classes->size()) {
      o["class"] = classes->name(cls);
    }
    o["count"] = count;
    per_class.push_back(std::move(o));
  }
  j["per_class"] = std::move(per_class);
  j["box_width"] = QuantilesJson(stats.box_width);
  j["box_height"] = QuantilesJson(stats.box_height);
  return DumpFixed(j);
}

std::vector<PlateTruth> ParsePlateTruth(std::string_view text) {
  std::vector<PlateTruth> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2 && tok.size() != 6) {
      throw ParseError(ParseError::Kind::kTokenCount, line_no,
                       "expected '<image> <text> [x1 y1 x2 y2]'");
    }
    PlateTruth t{tok[0], tok[1], std::nullopt};
    if (tok.size() == 6) {
      double v[4];
      for (int i = 0; i < 4; ++i) {
        std::size_t used = 0;
        try {
          v[i] = std::stod(tok[2 + i], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok[2 + i].size()) {
          throw ParseError(ParseError::Kind::kNotNumeric, line_no,
                           "box coordinate '" + tok[2 + i] + "' is not a number");
        }
      }
      t.box = BBox{v[0], v[1], v[2], v[3]};
      if (!t.box->IsValid()) {
        throw ParseError(ParseError::Kind::kOutOfRange, line_no,
                         "box has x2 < x1 or y2 < y1");
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<PlateTruth> LoadPlateTruth(const fs::path& path) {
  try {
    return ParsePlateTruth(ReadText(path));
  } catch (const ParseError& e) {
    throw ParseError(e, path.string());
  }
}

SequencePairs PairReadings(const std::vector<ImageReadings>& readings,
                           const std::vector<PlateTruth>& truth,
                           double min_iou) {
  std::map<std::string, std::vector<const PlateTruth*>> truth_by_image;
  for (const auto& t : truth) truth_by_image[t.image].push_back(&t);

  SequencePairs pairs;
  auto truth_key = [](const std::string& image, std::size_t k, std::size_t n) {
    return n == 1 ? image : fmt::format("{}#{}", image, k);
  };
  for (const auto& [image, plates] : truth_by_image) {
    for (std::size_t k = 0; k < plates.size(); ++k) {
      pairs.truth[truth_key(image, k, plates.size())] = plates[k]->text;
    }
  }

  std::set<std::string> seen_images;
  for (const auto& rec : readings) {
    if (!seen_images.insert(rec.image).second) {
      throw Error(ErrorCode::kFormat,
                  "image '" + rec.image + "' appears twice in readings");
    }
    const auto it = truth_by_image.find(rec.image);
    const std::vector<const PlateTruth*> none;
    const auto& plates = it == truth_by_image.end() ? none : it->second;
    const bool by_box =
        !plates.empty() &&
        std::all_of(plates.begin(), plates.end(),
                    [](const PlateTruth* t) { return t->box.has_value(); });

    std::vector<char> taken(plates.size(), 0);
    std::size_t extra = 0;
    for (std::size_t r = 0; r < rec.readings.size(); ++r) {
      int match = -1;
      if (by_box) {
        double best = -1.0;
        for (std::size_t k = 0; k < plates.size(); ++k) {
          if (taken[k]) continue;
          const double v = IoU(rec.readings[r].plate.box, *plates[k]->box);
          if (v > best) {
            best = v;
            match = static_cast<int>(k);
          }
        }
        if (best < min_iou) match = -1;
      } else if (r < plates.size()) {
        match = static_cast<int>(r);
      }
      if (match >= 0) {
        taken[match] = 1;
        pairs.predicted[truth_key(rec.image, match, plates.size())] =
            rec.readings[r].text;
      } else {
        pairs.predicted[fmt::format("{}#extra{}", rec.image, extra++)] =
            rec.readings[r].text;
      }
    }
  }
  return pairs;
}

}  // namespace plateflow
