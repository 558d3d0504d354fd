// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Box algebra in continuous pixel coordinates: top-left origin, x right,
// y down, area = (x2 - x1) * (y2 - y1) with no +1 pixel convention.

#pragma once

namespace plateflow {

struct BBox {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double Width() const { return x2 - x1; }
  double Height() const { return y2 - y1; }
  double Area() const { return Width() * Height(); }
  double CenterX() const { return (x1 + x2) / 2.0; }
  double CenterY() const { return (y1 + y2) / 2.0; }

  // Finite coordinates with x1 <= x2 and y1 <= y2.
  bool IsValid() const;
  bool HasPositiveArea() const { return IsValid() && Area() > 0.0; }

  static BBox FromCenter(double cx, double cy, double w, double h) {
    return {cx - w / 2.0, cy - h / 2.0, cx + w / 2.0, cy + h / 2.0};
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

// YOLO label convention: centre and size as fractions of the image.
struct NormBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  // 0 <= cx, cy <= 1 and 0 < w, h <= 1.
  bool IsValid() const;

  friend bool operator==(const NormBox&, const NormBox&) = default;
};

// Aspect-preserving resize of a src_w x src_h image into dst_w x dst_h with
// symmetric padding. The padding offsets are kept continuous.
struct LetterboxTransform {
  double scale = 1.0;
  double pad_x = 0.0;
  double pad_y = 0.0;
  int src_w = 0;
  int src_h = 0;
  int dst_w = 0;
  int dst_h = 0;

  bool IsValid() const;
};

// Grey level used for letterbox padding, per channel.
inline constexpr unsigned char kLetterboxPadValue = 114;

// Intersection over union. Zero when the union has no area.
double IoU(const BBox& a, const BBox& b);

// Decodes a normalized box to pixels, clamped to [0, img_w] x [0, img_h].
BBox NormToPixels(const NormBox& n, int img_w, int img_h);

// Inverse of NormToPixels for boxes already inside the image.
NormBox PixelsToNorm(const BBox& b, int img_w, int img_h);

// Clamps a box to [0, w] x [0, h].
BBox ClampBox(const BBox& b, double w, double h);

LetterboxTransform PlanLetterbox(int src_w, int src_h, int dst_w, int dst_h);
inline LetterboxTransform PlanLetterbox(int src_w, int src_h, int dst) {
  return PlanLetterbox(src_w, src_h, dst, dst);
}

// Source space -> model space. No clamping.
BBox MapBox(const BBox& b, const LetterboxTransform& t);

// Model space -> source space, clamped to the source bounds.
BBox UnmapBox(const BBox& b, const LetterboxTransform& t);

}  // namespace plateflow
