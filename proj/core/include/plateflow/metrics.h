// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Detection metrics: greedy IoU matching, 101-point interpolated AP,
// mAP50 / mAP50-95, operating-point precision/recall, exact-match sequence
// accuracy, and the classification / box regression loss diagnostics.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plateflow/dataset.h"
#include "plateflow/geometry.h"
#include "plateflow/postprocess.h"

namespace plateflow {

struct GroundTruthBox {
  BBox box;
  int class_id = 0;
};

// 0.50:0.05:0.95, written out so every threshold is the nearest double to
// its decimal value.
inline constexpr std::array<double, 10> kCocoIouThresholds = {
    0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};

inline constexpr int kRecallPoints = 101;

// Greedy matching of one image. Detections are visited in rank order
// (RanksBefore); each becomes a true positive at a threshold iff the
// unmatched same-class ground truth with the highest IoU (lowest index on
// ties) reaches that threshold, and that ground truth is then consumed.
// Thresholds are matched independently.
struct MatchResult {
  std::vector<double> iou_thresholds;
  std::vector<Detection> detections;  // rank order
  // matched_gt[t][d]: index into the ground-truth input, or -1.
  std::vector<std::vector<int>> matched_gt;
  std::vector<std::size_t> gt_per_class;

  bool IsTruePositive(std::size_t threshold, std::size_t det) const {
    return matched_gt[threshold][det] >= 0;
  }
};

// Throws Error(kInvalidArgument) for a class id outside [0, num_classes) or
// more than 32 thresholds.
MatchResult Match(std::span<const Detection> preds,
                  std::span<const GroundTruthBox> gts,
                  std::span<const double> iou_thresholds, int num_classes);
MatchResult Match(std::span<const Detection> preds,
                  std::span<const GroundTruthBox> gts, double iou_threshold,
                  int num_classes);

// One point of a precision/recall curve, taken after all detections of one
// confidence value have been consumed.
struct PrPoint {
  double confidence = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
};

// Order-independent accumulation of match results across images. Merging is
// associative and commutative.
class EvalAccumulator {
 public:
  explicit EvalAccumulator(int num_classes,
                           std::vector<double> iou_thresholds = {
                               kCocoIouThresholds.begin(),
                               kCocoIouThresholds.end()});

  void Add(const MatchResult& m);
  void Merge(const EvalAccumulator& other);

  int num_classes() const { return num_classes_; }
  const std::vector<double>& iou_thresholds() const { return iou_thresholds_; }
  std::size_t gt_count(int cls) const { return gt_count_[cls]; }
  std::size_t pred_count(int cls) const { return records_[cls].size(); }
  std::size_t images() const { return images_; }

  // Cumulative TP/FP after each distinct confidence, highest first.
  std::vector<PrPoint> Curve(int cls, std::size_t threshold) const;

  // 101-point interpolated AP with a right-max precision envelope; absent
  // when the class has no ground truth.
  std::optional<double> AveragePrecision(int cls, std::size_t threshold) const;

  struct Record {
    double confidence;
    std::uint32_t tp_mask;  // bit t set: true positive at threshold t
  };
  const std::vector<Record>& records(int cls) const { return records_[cls]; }

 private:
  int num_classes_;
  std::vector<double> iou_thresholds_;
  std::vector<std::vector<Record>> records_;
  std::vector<std::size_t> gt_count_;
  std::size_t images_ = 0;
};

// 101-point AP of a curve with `num_gt` positives. `num_gt` must be > 0.
double InterpolatedAp(std::span<const PrPoint> curve, std::size_t num_gt,
                      int recall_points = kRecallPoints);

struct OperatingPoint {
  double confidence = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalOptions {
  std::vector<double> iou_thresholds{kCocoIouThresholds.begin(),
                                     kCocoIouThresholds.end()};
  double fixed_confidence = 0.25;
};

struct ClassReport {
  int class_id = 0;
  std::string name;
  std::size_t gt_count = 0;
  std::size_t pred_count = 0;
  std::optional<double> ap50;     // at the first IoU threshold
  std::optional<double> ap50_95;  // mean over all thresholds
};

struct EvalReport {
  std::vector<ClassReport> classes;
  std::optional<double> map50;
  std::optional<double> map50_95;
  OperatingPoint best_f1;  // headline precision/recall
  OperatingPoint fixed;    // at options.fixed_confidence
  std::optional<double> sequence_accuracy;
  bool empty_ground_truth = false;
  std::size_t images = 0;
  std::size_t instances = 0;
  EvalOptions options;
};

// Precision and recall (at the first IoU threshold) of detections with
// confidence >= `confidence`, averaged over classes with ground truth. A
// class with no such detection has precision 0.
OperatingPoint OperatingPointAt(const EvalAccumulator& acc, double confidence);

// Operating point over every distinct detection confidence that maximizes
// F1; ties go to the higher confidence.
OperatingPoint BestF1OperatingPoint(const EvalAccumulator& acc);

EvalReport Summarize(const EvalAccumulator& acc, const ClassMap& classes,
                     const EvalOptions& options);

struct ImageEval {
  std::vector<Detection> predictions;
  std::vector<GroundTruthBox> ground_truth;
};

EvalReport EvaluateDetections(std::span<const ImageEval> images,
                              const ClassMap& classes,
                              const EvalOptions& options = {});

struct SequenceMismatch {
  std::string key;
  std::string predicted;  // empty when the key had no prediction
  std::string truth;
};

struct SequenceScore {
  std::optional<double> accuracy;  // absent when truth is empty
  std::size_t total = 0;           // truth keys
  std::size_t correct = 0;
  std::vector<SequenceMismatch> mismatches;  // includes missing keys
  std::vector<std::string> missing;          // truth keys with no prediction
  std::vector<std::string> extra;            // predicted keys with no truth
};

// Exact, case-sensitive string equality per key. Truth keys without a
// prediction count as failures; predicted keys without truth are listed in
// `extra` and do not affect the ratio.
SequenceScore SequenceAccuracy(const std::map<std::string, std::string>& predicted,
                               const std::map<std::string, std::string>& truth);

// -sum_i y_i log(p_i) for one-hot y. Throws Error(kInvalidArgument) on a
// length mismatch, a y that is not one-hot, or p outside [0, 1];
// Error(kDomain) when p is 0 at the true class.
double ClassificationLoss(std::span<const double> y, std::span<const double> p);

// sum_i (x_i - x_hat_i)^2. Throws Error(kInvalidArgument) on length mismatch.
double BoxLoss(std::span<const double> x, std::span<const double> x_hat);

struct LossSample {
  std::vector<double> y;
  std::vector<double> p;
  std::vector<double> x;
  std::vector<double> x_hat;
};

inline double ClassificationLoss(const LossSample& s) {
  return ClassificationLoss(s.y, s.p);
}
inline double BoxLoss(const LossSample& s) { return BoxLoss(s.x, s.x_hat); }

}  // namespace plateflow
