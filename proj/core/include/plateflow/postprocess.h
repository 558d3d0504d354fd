// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "plateflow/geometry.h"
#include "plateflow/rawhead.h"

namespace plateflow {

struct Detection {
  BBox box;
  int class_id = 0;
  double confidence = 0.0;

  friend bool operator==(const Detection&, const Detection&) = default;
};

enum class NmsMode {
  kClassAware,     // only same-class detections suppress each other
  kClassAgnostic,  // any overlap suppresses
};

struct PostprocessConfig {
  double conf_threshold = 0.25;
  double iou_threshold = 0.45;
  NmsMode nms_mode = NmsMode::kClassAware;
};

// Strict weak order used everywhere detections are ranked: confidence
// descending, then smaller x1, smaller y1, lower class id.
bool RanksBefore(const Detection& a, const Detection& b);

// One candidate per anchor column: the arg-max class, kept when its score is
// >= conf_threshold and the decoded box has positive area. Output is in
// column order. Throws Error(kDecode) naming the column on a non-finite
// entry or a class score outside [0, 1].
std::vector<Detection> Decode(const RawHeadOutput& raw, double conf_threshold);

// Greedy suppression. A detection survives iff its IoU with every detection
// already kept (of the same class in kClassAware mode) is <= iou_threshold.
// Boxes without positive area are dropped. Output is in rank order.
std::vector<Detection> Nms(std::span<const Detection> dets, double iou_threshold,
                           NmsMode mode);

// Decode, suppress, then map every box back through `t` into source space.
// Boxes that clamp to zero area (entirely inside the padding) are dropped.
std::vector<Detection> PostprocessImage(const RawHeadOutput& raw,
                                        const PostprocessConfig& cfg,
                                        const LetterboxTransform& t);

}  // namespace plateflow
