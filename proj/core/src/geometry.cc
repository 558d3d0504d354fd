// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/geometry.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow {

bool BBox::IsValid() const {
  return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) &&
         std::isfinite(y2) && x1 <= x2 && y1 <= y2;
}

bool NormBox::IsValid() const {
  auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  return unit(cx) && unit(cy) && unit(w) && unit(h) && w > 0.0 && h > 0.0;
}

bool LetterboxTransform::IsValid() const {
  return src_w > 0 && src_h > 0 && dst_w > 0 && dst_h > 0 &&
         std::isfinite(scale) && scale > 0.0 && pad_x >= 0.0 && pad_y >= 0.0;
}

double IoU(const BBox& a, const BBox& b) {
  const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.Area() + b.Area() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

BBox ClampBox(const BBox& b, double w, double h) {
  return {std::clamp(b.x1, 0.0, w), std::clamp(b.y1, 0.0, h),
          std::clamp(b.x2, 0.0, w), std::clamp(b.y2, 0.0, h)};
}

BBox NormToPixels(const NormBox& n, int img_w, int img_h) {
  const double w = img_w;
  const double h = img_h;
  const BBox b{(n.cx - n.w / 2.0) * w, (n.cy - n.h / 2.0) * h,
               (n.cx + n.w / 2.0) * w, (n.cy + n.h / 2.0) * h};
  return ClampBox(b, w, h);
}

NormBox PixelsToNorm(const BBox& b, int img_w, int img_h) {
  const double w = img_w;
  const double h = img_h;
  return {b.CenterX() / w, b.CenterY() / h, b.Width() / w, b.Height() / h};
}

LetterboxTransform PlanLetterbox(int src_w, int src_h, int dst_w, int dst_h) {
  if (src_w <= 0 || src_h <= 0 || dst_w <= 0 || dst_h <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("letterbox needs positive sizes, got {}x{} -> {}x{}",
                            src_w, src_h, dst_w, dst_h));
  }
  LetterboxTransform t;
  t.src_w = src_w;
  t.src_h = src_h;
  t.dst_w = dst_w;
  t.dst_h = dst_h;
  t.scale = std::min(static_cast<double>(dst_w) / src_w,
                     static_cast<double>(dst_h) / src_h);
  t.pad_x = std::max(0.0, (dst_w - t.scale * src_w) / 2.0);
  t.pad_y = std::max(0.0, (dst_h - t.scale * src_h) / 2.0);
  return t;
}

BBox MapBox(const BBox& b, const LetterboxTransform& t) {
  return {b.x1 * t.scale + t.pad_x, b.y1 * t.scale + t.pad_y,
          b.x2 * t.scale + t.pad_x, b.y2 * t.scale + t.pad_y};
}

BBox UnmapBox(const BBox& b, const LetterboxTransform& t) {
  const BBox src{(b.x1 - t.pad_x) / t.scale, (b.y1 - t.pad_y) / t.scale,
                 (b.x2 - t.pad_x) / t.scale, (b.y2 - t.pad_y) / t.scale};
  return ClampBox(src, t.src_w, t.src_h);
}

}  // namespace plateflow
