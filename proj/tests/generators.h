// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Random instance generators and property checks shared by the unit tests
// and the acceptance runner.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "plateflow/metrics.h"
#include "plateflow/pipeline.h"
#include "plateflow/postprocess.h"
#include "test_support.h"

namespace plateflow::testing {

// Detections clustered around a few centres so that overlaps are common.
// Confidences are drawn from a coarse grid so ties occur.
inline std::vector<Detection> RandomDetections(std::mt19937_64& rng, int max_count,
                                               int num_classes) {
  std::uniform_int_distribution<int> count(0, max_count);
  std::uniform_int_distribution<int> clusters(1, 4);
  std::uniform_real_distribution<double> pos(0.0, 200.0);
  std::uniform_real_distribution<double> size(5.0, 60.0);
  std::normal_distribution<double> jitter(0.0, 6.0);
  std::uniform_int_distribution<int> cls(0, num_classes - 1);
  std::uniform_int_distribution<int> conf_step(1, 20);

  std::vector<BBox> centres;
  const int nc = clusters(rng);
  for (int i = 0; i < nc; ++i) {
    const double w = size(rng);
    const double h = size(rng);
    centres.push_back(BBox::FromCenter(pos(rng), pos(rng), w, h));
  }
  std::vector<Detection> out;
  const int n = count(rng);
  std::uniform_int_distribution<int> pick(0, nc - 1);
  for (int i = 0; i < n; ++i) {
    const BBox& c = centres[pick(rng)];
    BBox b{c.x1 + jitter(rng), c.y1 + jitter(rng), c.x2 + jitter(rng), c.y2 + jitter(rng)};
    if (b.x2 < b.x1) std::swap(b.x1, b.x2);
    if (b.y2 < b.y1) std::swap(b.y1, b.y2);
    out.push_back({b, cls(rng), conf_step(rng) / 20.0});
  }
  return out;
}

// Checks the NMS contract on one case; returns "" or a violation.
inline std::string CheckNmsProperties(const std::vector<Detection>& in, double thr,
                                      NmsMode mode) {
  const std::vector<Detection> out = Nms(in, thr, mode);
  const bool aware = mode == NmsMode::kClassAware;
  // Subset.
  for (const auto& k : out) {
    const bool found = std::any_of(in.begin(), in.end(), [&](const Detection& d) {
      return d.box == k.box && d.class_id == k.class_id && d.confidence == k.confidence;
    });
    if (!found) return "output is not a subset of the input";
  }
  // Pairwise IoU bound.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (aware && out[i].class_id != out[j].class_id) continue;
      if (oracle::IoU(out[i].box, out[j].box) > thr) return "kept pair overlaps above threshold";
    }
  }
  // Confidence monotonicity of the output order.
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].confidence > out[i - 1].confidence) return "output not ordered by confidence";
  }
  // The top-ranked positive-area input always survives.
  const auto ranked = oracle::ByRank(in);
  for (const auto& d : ranked) {
    if (d.box.Width() > 0 && d.box.Height() > 0) {
      if (out.empty() || !(out.front().box == d.box)) return "top detection was suppressed";
      break;
    }
  }
  // Idempotence.
  const std::vector<Detection> again = Nms(out, thr, mode);
  if (again.size() != out.size()) return "not idempotent";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(again[i].box == out[i].box) || again[i].confidence != out[i].confidence) {
      return "not idempotent";
    }
  }
  // Definition of greedy suppression.
  return oracle::CheckGreedyNms(in, out, thr, aware);
}

struct MetricInstance {
  int num_classes = 1;
  std::vector<ImageEval> images;
};

// Small multi-image instance: ground truth boxes, and predictions that are
// jittered copies (true-ish positives) mixed with random boxes.
inline MetricInstance RandomMetricInstance(std::mt19937_64& rng, int max_classes,
                                           int max_detections) {
  MetricInstance inst;
  inst.num_classes = std::uniform_int_distribution<int>(1, max_classes)(rng);
  const int images = std::uniform_int_distribution<int>(1, 4)(rng);
  int budget = std::uniform_int_distribution<int>(0, max_detections)(rng);
  std::uniform_int_distribution<int> cls(0, inst.num_classes - 1);
  std::normal_distribution<double> jitter(0.0, 4.0);
  std::uniform_int_distribution<int> conf_step(1, 40);
  std::bernoulli_distribution keep_gt(0.7);
  std::bernoulli_distribution wrong_class(0.1);
  for (int im = 0; im < images; ++im) {
    ImageEval ev;
    const int gts = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int g = 0; g < gts; ++g) ev.ground_truth.push_back({RandomBox(rng, 300, 300, 8.0), cls(rng)});
    const int share = im + 1 == images ? budget : std::uniform_int_distribution<int>(0, budget)(rng);
    budget -= share;
    for (int p = 0; p < share; ++p) {
      Detection d;
      if (!ev.ground_truth.empty() && keep_gt(rng)) {
        const auto& g = ev.ground_truth[std::uniform_int_distribution<std::size_t>(
            0, ev.ground_truth.size() - 1)(rng)];
        d.box = {g.box.x1 + jitter(rng), g.box.y1 + jitter(rng), g.box.x2 + jitter(rng),
                 g.box.y2 + jitter(rng)};
        if (d.box.x2 <= d.box.x1) d.box.x2 = d.box.x1 + 1.0;
        if (d.box.y2 <= d.box.y1) d.box.y2 = d.box.y1 + 1.0;
        d.class_id = wrong_class(rng) ? cls(rng) : g.class_id;
      } else {
        d.box = RandomBox(rng, 300, 300, 8.0);
        d.class_id = cls(rng);
      }
      d.confidence = conf_step(rng) / 40.0;
      ev.predictions.push_back(d);
    }
    inst.images.push_back(std::move(ev));
  }
  return inst;
}

// Exact AP of one class at one IoU threshold, from replayed matching; -1
// when the class has no ground truth.
inline double OracleAp(const MetricInstance& inst, int cls, double thr) {
  std::vector<oracle::Scored> scored;
  std::size_t num_gt = 0;
  for (const auto& im : inst.images) {
    const auto ranked = oracle::ByRank(im.predictions);
    const auto match = oracle::ReplayMatch(im.predictions, im.ground_truth, thr);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (ranked[i].class_id == cls) scored.push_back({ranked[i].confidence, match[i] >= 0});
    }
    for (const auto& g : im.ground_truth) num_gt += g.class_id == cls ? 1 : 0;
  }
  if (num_gt == 0) return -1.0;
  return oracle::AllPointsAp(std::move(scored), num_gt);
}

inline ClassMap NumberedClasses(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return ClassMap::Create(std::move(names));
}

// Glyphs on one row with strictly increasing x centres, and their string.
struct SyntheticPlate {
  std::string text;
  std::vector<CharacterObservation> glyphs;  // in reading order
};

inline SyntheticPlate RandomPlate(std::mt19937_64& rng, int min_len = 4, int max_len = 9) {
  static const std::string kGlyphs = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  const int n = std::uniform_int_distribution<int>(min_len, max_len)(rng);
  std::uniform_real_distribution<double> gap(2.0, 30.0);
  std::uniform_real_distribution<double> width(4.0, 25.0);
  std::uniform_real_distribution<double> yoff(-3.0, 3.0);
  std::uniform_real_distribution<double> conf(0.25, 1.0);
  std::uniform_int_distribution<int> glyph(0, 35);
  SyntheticPlate p;
  double x = std::uniform_real_distribution<double>(15.0, 30.0)(rng);  // centre
  for (int i = 0; i < n; ++i) {
    const int cls = glyph(rng);
    const double w = width(rng);
    CharacterObservation o;
    o.class_id = cls;
    o.glyph = std::string(1, kGlyphs[cls]);
    o.box = {x - w / 2.0, 10.0 + yoff(rng), x + w / 2.0, 40.0 + yoff(rng)};
    o.x_center = o.box.CenterX();
    o.confidence = conf(rng);
    p.text += o.glyph;
    p.glyphs.push_back(o);
    x += gap(rng);  // centres strictly increase
  }
  return p;
}

}  // namespace plateflow::testing
