// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/postprocess.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow {

bool RanksBefore(const Detection& a, const Detection& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  if (a.box.x1 != b.box.x1) return a.box.x1 < b.box.x1;
  if (a.box.y1 != b.box.y1) return a.box.y1 < b.box.y1;
  return a.class_id < b.class_id;
}

std::vector<Detection> Decode(const RawHeadOutput& raw, double conf_threshold) {
  if (!(conf_threshold >= 0.0 && conf_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("confidence threshold {} outside [0, 1]",
                            conf_threshold));
  }
  const int classes = raw.num_classes();
  std::vector<Detection> out;
  for (int col = 0; col < raw.cols(); ++col) {
    for (int r = 0; r < raw.rows(); ++r) {
      if (!std::isfinite(raw.at(r, col))) {
        throw Error(ErrorCode::kDecode,
                    fmt::format("non-finite value at row {} of anchor column {}",
                                r, col));
      }
    }
    int best = 0;
    float best_score = raw.at(4, col);
    for (int k = 0; k < classes; ++k) {
      const float s = raw.at(4 + k, col);
      if (s < 0.0f || s > 1.0f) {
        throw Error(ErrorCode::kDecode,
                    fmt::format("class score {} outside [0, 1] at anchor "
                                "column {}",
                                s, col));
      }
      if (s > best_score) {
        best_score = s;
        best = k;
      }
    }
    if (static_cast<double>(best_score) < conf_threshold) continue;
    const BBox box = BBox::FromCenter(raw.at(0, col), raw.at(1, col),
                                      raw.at(2, col), raw.at(3, col));
    if (!box.HasPositiveArea()) continue;
    out.push_back({box, best, static_cast<double>(best_score)});
  }
  return out;
}

std::vector<Detection> Nms(std::span<const Detection> dets, double iou_threshold,
                           NmsMode mode) {
  if (!(iou_threshold >= 0.0 && iou_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("IoU threshold {} outside [0, 1]", iou_threshold));
  }
  std::vector<Detection> order;
  order.reserve(dets.size());
  for (const auto& d : dets) {
    if (d.box.HasPositiveArea()) order.push_back(d);
  }
  std::sort(order.begin(), order.end(), RanksBefore);

  std::vector<Detection> kept;
  for (const auto& cand : order) {
    bool keep = true;
    for (const auto& k : kept) {
      if (mode == NmsMode::kClassAware && k.class_id != cand.class_id) continue;
      if (IoU(k.box, cand.box) > iou_threshold) {
        keep = false;
        break;
      }
    }
    if (keep) kept.push_back(cand);
  }
  return kept;
}

std::vector<Detection> PostprocessImage(const RawHeadOutput& raw,
                                        const PostprocessConfig& cfg,
                                        const LetterboxTransform& t) {
  auto dets = Nms(Decode(raw, cfg.conf_threshold), cfg.iou_threshold,
                  cfg.nms_mode);
  std::vector<Detection> out;
  out.reserve(dets.size());
  for (auto& d : dets) {
    d.box = UnmapBox(d.box, t);
    // Boxes entirely inside the padding collapse when clamped.
    if (d.box.HasPositiveArea()) out.push_back(d);
  }
  return out;
}

}  // namespace plateflow
