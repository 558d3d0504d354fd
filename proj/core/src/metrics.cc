// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow {
namespace {

void CheckClass(int cls, int num_classes, const char* what) {
  if (cls < 0 || cls >= num_classes) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} class id {} outside class map of {}", what, cls,
                            num_classes));
  }
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double F1(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

}  // namespace

MatchResult Match(std::span<const Detection> preds,
                  std::span<const GroundTruthBox> gts,
                  std::span<const double> iou_thresholds, int num_classes) {
  if (iou_thresholds.empty() || iou_thresholds.size() > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "between 1 and 32 IoU thresholds are supported");
  }
  for (const auto& p : preds) CheckClass(p.class_id, num_classes, "prediction");
  for (const auto& g : gts) CheckClass(g.class_id, num_classes, "ground truth");

  MatchResult m;
  m.iou_thresholds.assign(iou_thresholds.begin(), iou_thresholds.end());
  m.detections.assign(preds.begin(), preds.end());
  std::stable_sort(m.detections.begin(), m.detections.end(), RanksBefore);
  m.gt_per_class.assign(num_classes, 0);
  for (const auto& g : gts) ++m.gt_per_class[g.class_id];

  // IoU does not depend on the threshold; compute each pair once.
  const std::size_t nd = m.detections.size();
  const std::size_t ng = gts.size();
  std::vector<double> iou(nd * ng, -1.0);
  for (std::size_t d = 0; d < nd; ++d) {
    for (std::size_t g = 0; g < ng; ++g) {
      if (gts[g].class_id == m.detections[d].class_id) {
        iou[d * ng + g] = IoU(m.detections[d].box, gts[g].box);
      }
    }
  }

  m.matched_gt.assign(iou_thresholds.size(), std::vector<int>(nd, -1));
  std::vector<char> taken(ng);
  for (std::size_t t = 0; t < iou_thresholds.size(); ++t) {
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t d = 0; d < nd; ++d) {
      int best = -1;
      double best_iou = -1.0;
      for (std::size_t g = 0; g < ng; ++g) {
        const double v = iou[d * ng + g];
        if (v < 0.0 || taken[g]) continue;
        if (v > best_iou) {
          best_iou = v;
          best = static_cast<int>(g);
        }
      }
      if (best >= 0 && best_iou >= iou_thresholds[t]) {
        taken[best] = 1;
        m.matched_gt[t][d] = best;
      }
    }
  }
  return m;
}

MatchResult Match(std::span<const Detection> preds,
                  std::span<const GroundTruthBox> gts, double iou_threshold,
                  int num_classes) {
  const double t[1] = {iou_threshold};
  return Match(preds, gts, t, num_classes);
}

EvalAccumulator::EvalAccumulator(int num_classes,
                                 std::vector<double> iou_thresholds)
    : num_classes_(num_classes),
      iou_thresholds_(std::move(iou_thresholds)),
      records_(num_classes),
      gt_count_(num_classes, 0) {
  if (num_classes <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one class");
  }
  if (iou_thresholds_.empty() || iou_thresholds_.size() > 32) {
    throw Error(ErrorCode::kInvalidArgument,
                "between 1 and 32 IoU thresholds are supported");
  }
}

void EvalAccumulator::Add(const MatchResult& m) {
  if (m.iou_thresholds != iou_thresholds_ ||
      m.gt_per_class.size() != static_cast<std::size_t>(num_classes_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "match result thresholds or class count differ from "
                "accumulator");
  }
  for (std::size_t d = 0; d < m.detections.size(); ++d) {
    std::uint32_t mask = 0;
    for (std::size_t t = 0; t < iou_thresholds_.size(); ++t) {
      if (m.IsTruePositive(t, d)) mask |= 1u << t;
    }
    records_[m.detections[d].class_id].push_back(
        {m.detections[d].confidence, mask});
  }
  for (int c = 0; c < num_classes_; ++c) gt_count_[c] += m.gt_per_class[c];
  ++images_;
}

void EvalAccumulator::Merge(const EvalAccumulator& other) {
  if (other.num_classes_ != num_classes_ ||
      other.iou_thresholds_ != iou_thresholds_) {
    throw Error(ErrorCode::kInvalidArgument, "cannot merge mismatched accumulators");
  }
  for (int c = 0; c < num_classes_; ++c) {
    records_[c].insert(records_[c].end(), other.records_[c].begin(),
                       other.records_[c].end());
    gt_count_[c] += other.gt_count_[c];
  }
  images_ += other.images_;
}

std::vector<PrPoint> EvalAccumulator::Curve(int cls,
                                            std::size_t threshold) const {
  std::vector<Record> recs = records_[cls];
  std::sort(recs.begin(), recs.end(), [](const Record& a, const Record& b) {
    return a.confidence > b.confidence;
  });
  std::vector<PrPoint> curve;
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].tp_mask & (1u << threshold)) {
      ++tp;
    } else {
      ++fp;
    }
    // Detections sharing a confidence are indistinguishable; emit one point
    // per group so the curve does not depend on input order.
    if (i + 1 == recs.size() || recs[i + 1].confidence != recs[i].confidence) {
      curve.push_back({recs[i].confidence, tp, fp});
    }
  }
  return curve;
}

double InterpolatedAp(std::span<const PrPoint> curve, std::size_t num_gt,
                      int recall_points) {
  if (num_gt == 0 || recall_points < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "AP needs positives and at least two recall points");
  }
  // Envelope: best precision at this recall or any higher one.
  std::vector<double> envelope(curve.size());
  double running = 0.0;
  for (std::size_t k = curve.size(); k-- > 0;) {
    const double p = static_cast<double>(curve[k].tp) /
                     static_cast<double>(curve[k].tp + curve[k].fp);
    running = std::max(running, p);
    envelope[k] = running;
  }
  // Recall level i / (recall_points - 1) is reached at the first point with
  // tp / num_gt >= i / (recall_points - 1); compared in integers.
  const std::size_t steps = static_cast<std::size_t>(recall_points - 1);
  double sum = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i <= steps; ++i) {
    while (k < curve.size() && curve[k].tp * steps < i * num_gt) ++k;
    if (k == curve.size()) break;
    sum += envelope[k];
  }
  return sum / static_cast<double>(recall_points);
}

std::optional<double> EvalAccumulator::AveragePrecision(
    int cls, std::size_t threshold) const {
  if (gt_count_[cls] == 0) return std::nullopt;
  const auto curve = Curve(cls, threshold);
  return InterpolatedAp(curve, gt_count_[cls]);
}

OperatingPoint OperatingPointAt(const EvalAccumulator& acc, double confidence) {
  std::vector<double> precisions;
  std::vector<double> recalls;
  for (int c = 0; c < acc.num_classes(); ++c) {
    if (acc.gt_count(c) == 0) continue;
    std::size_t tp = 0;
    std::size_t fp = 0;
    for (const auto& r : acc.records(c)) {
      if (r.confidence < confidence) continue;
      (r.tp_mask & 1u) ? ++tp : ++fp;
    }
    precisions.push_back(tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0);
    recalls.push_back(static_cast<double>(tp) / acc.gt_count(c));
  }
  OperatingPoint op;
  op.confidence = confidence;
  if (precisions.empty()) return op;
  op.precision = Mean(precisions);
  op.recall = Mean(recalls);
  op.f1 = F1(op.precision, op.recall);
  return op;
}

OperatingPoint BestF1OperatingPoint(const EvalAccumulator& acc) {
  struct Item {
    double confidence;
    int cls;
    bool tp;
  };
  std::vector<int> scored;
  std::vector<Item> items;
  for (int c = 0; c < acc.num_classes(); ++c) {
    if (acc.gt_count(c) == 0) continue;
    scored.push_back(c);
    for (const auto& r : acc.records(c)) {
      items.push_back({r.confidence, c, (r.tp_mask & 1u) != 0});
    }
  }
  OperatingPoint best;
  if (scored.empty() || items.empty()) return best;
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.confidence > b.confidence;
  });

  std::vector<std::size_t> tp(acc.num_classes(), 0);
  std::vector<std::size_t> fp(acc.num_classes(), 0);
  std::vector<double> precisions(scored.size());
  std::vector<double> recalls(scored.size());
  bool have = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (items[i].tp ? tp : fp)[items[i].cls]++;
    if (i + 1 < items.size() && items[i + 1].confidence == items[i].confidence) {
      continue;
    }
    for (std::size_t k = 0; k < scored.size(); ++k) {
      const int c = scored[k];
      precisions[k] =
          tp[c] + fp[c] > 0 ? static_cast<double>(tp[c]) / (tp[c] + fp[c]) : 0.0;
      recalls[k] = static_cast<double>(tp[c]) / acc.gt_count(c);
    }
    const double p = Mean(precisions);
    const double r = Mean(recalls);
    const double f1 = F1(p, r);
    if (!have || f1 > best.f1) {
      best = {items[i].confidence, p, r, f1};
      have = true;
    }
  }
  return best;
}

EvalReport Summarize(const EvalAccumulator& acc, const ClassMap& classes,
                     const EvalOptions& options) {
  if (classes.size() != static_cast<std::size_t>(acc.num_classes())) {
    throw Error(ErrorCode::kInvalidArgument,
                "class map size differs from accumulator");
  }
  EvalReport report;
  report.options = options;
  report.images = acc.images();
  std::vector<double> ap50s;
  std::vector<double> ap50_95s;
  for (int c = 0; c < acc.num_classes(); ++c) {
    ClassReport cr;
    cr.class_id = c;
    cr.name = classes.name(c);
    cr.gt_count = acc.gt_count(c);
    cr.pred_count = acc.pred_count(c);
    report.instances += cr.gt_count;
    if (cr.gt_count > 0) {
      std::vector<double> aps;
      for (std::size_t t = 0; t < acc.iou_thresholds().size(); ++t) {
        aps.push_back(*acc.AveragePrecision(c, t));
      }
      cr.ap50 = aps.front();
      cr.ap50_95 = Mean(aps);
      ap50s.push_back(*cr.ap50);
      ap50_95s.push_back(*cr.ap50_95);
    }
    report.classes.push_back(std::move(cr));
  }
  report.empty_ground_truth = ap50s.empty();
  if (!ap50s.empty()) {
    report.map50 = Mean(ap50s);
    report.map50_95 = Mean(ap50_95s);
  }
  report.best_f1 = BestF1OperatingPoint(acc);
  report.fixed = OperatingPointAt(acc, options.fixed_confidence);
  return report;
}

EvalReport EvaluateDetections(std::span<const ImageEval> images,
                              const ClassMap& classes,
                              const EvalOptions& options) {
  const int nc = static_cast<int>(classes.size());
  EvalAccumulator acc(nc, options.iou_thresholds);
  for (const auto& im : images) {
    acc.Add(Match(im.predictions, im.ground_truth, options.iou_thresholds, nc));
  }
  return Summarize(acc, classes, options);
}

SequenceScore SequenceAccuracy(
    const std::map<std::string, std::string>& predicted,
    const std::map<std::string, std::string>& truth) {
  SequenceScore s;
  s.total = truth.size();
  for (const auto& [key, text] : truth) {
    const auto it = predicted.find(key);
    if (it == predicted.end()) {
      s.missing.push_back(key);
      s.mismatches.push_back({key, "", text});
    } else if (it->second == text) {
      ++s.correct;
    } else {
      s.mismatches.push_back({key, it->second, text});
    }
  }
  for (const auto& [key, _] : predicted) {
    if (!truth.contains(key)) s.extra.push_back(key);
  }
  if (s.total > 0) {
    s.accuracy = static_cast<double>(s.correct) / static_cast<double>(s.total);
  }
  return s;
}

double ClassificationLoss(std::span<const double> y, std::span<const double> p) {
  if (y.size() != p.size() || y.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("label and probability vectors differ in length "
                            "({} vs {})",
                            y.size(), p.size()));
  }
  std::size_t ones = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 1.0) {
      ++ones;
    } else if (y[i] != 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "label vector is not one-hot");
    }
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("probability {} at index {} outside [0, 1]", p[i], i));
    }
  }
  if (ones != 1) {
    throw Error(ErrorCode::kInvalidArgument, "label vector is not one-hot");
  }
  double loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0.0) continue;
    if (p[i] == 0.0) {
      throw Error(ErrorCode::kDomain,
                  fmt::format("infinite loss: zero probability at true class {}",
                              i));
    }
    loss -= y[i] * std::log(p[i]);
  }
  return loss + 0.0;  // -log(1) is -0.0
}

double BoxLoss(std::span<const double> x, std::span<const double> x_hat) {
  if (x.size() != x_hat.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("coordinate vectors differ in length ({} vs {})",
                            x.size(), x_hat.size()));
  }
  double loss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - x_hat[i];
    loss += d * d;
  }
  return loss;
}

}  // namespace plateflow
