// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/report.h"

#include <fmt/format.h>

#include "json_fixed.h"
#include "plateflow/records.h"

namespace plateflow {

using internal::Json;

namespace {

Json Opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json PointJson(const OperatingPoint& op) {
  Json j = Json::object();
  j["confidence"] = op.confidence;
  j["precision"] = op.precision;
  j["recall"] = op.recall;
  j["f1"] = op.f1;
  return j;
}

std::string Cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.3f}", *v) : std::string("-");
}

}  // namespace

std::string ReportJson(const EvalReport& report,
                       const std::map<std::string, std::string>& settings) {
  Json j = Json::object();
  j["schema"] = kReportSchema;
  j["images"] = report.images;
  j["instances"] = report.instances;
  j["empty_ground_truth"] = report.empty_ground_truth;
  j["precision"] = report.best_f1.precision;
  j["recall"] = report.best_f1.recall;
  j["map50"] = Opt(report.map50);
  j["map50_95"] = Opt(report.map50_95);
  j["sequence_accuracy"] = Opt(report.sequence_accuracy);
  j["best_f1"] = PointJson(report.best_f1);
  j["fixed"] = PointJson(report.fixed);
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json o = Json::object();
    o["class_id"] = c.class_id;
    o["class"] = c.name;
    o["instances"] = c.gt_count;
    o["predictions"] = c.pred_count;
    o["ap50"] = Opt(c.ap50);
    o["ap50_95"] = Opt(c.ap50_95);
    classes.push_back(std::move(o));
  }
  j["classes"] = std::move(classes);
  Json config = Json::object();
  config["iou_thresholds"] = report.options.iou_thresholds;
  config["fixed_confidence"] = report.options.fixed_confidence;
  config["interpolation"] = "101-point, right-max precision envelope";
  config["matching"] = "greedy by confidence, best unmatched same-class IoU";
  j["config"] = std::move(config);
  Json echo = Json::object();
  for (const auto& [k, v] : settings) echo[k] = v;
  j["settings"] = std::move(echo);
  return internal::DumpFixed(j);
}

std::string ReportCsv(const EvalReport& report) {
  std::string out = "class_id,class,instances,predictions,ap50,ap50_95\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? fmt::format("{:.6f}", *v) : std::string();
  };
  for (const auto& c : report.classes) {
    out += fmt::format("{},{},{},{},{},{}\n", c.class_id, c.name, c.gt_count,
                       c.pred_count, cell(c.ap50), cell(c.ap50_95));
  }
  return out;
}

std::string ReportTable(const EvalReport& report) {
  std::string out = fmt::format("{:>12} {:>8} {:>10} {:>10} {:>8} {:>8} {:>9}\n",
                                "Class", "Images", "Instances", "Precision",
                                "Recall", "mAP50", "mAP50-95");
  out += fmt::format("{:>12} {:>8} {:>10} {:>10.3f} {:>8.3f} {:>8} {:>9}\n",
                     "all", report.images, report.instances,
                     report.best_f1.precision, report.best_f1.recall,
                     Cell(report.map50), Cell(report.map50_95));
  for (const auto& c : report.classes) {
    if (c.gt_count == 0) continue;
    out += fmt::format("{:>12} {:>8} {:>10} {:>10} {:>8} {:>8} {:>9}\n", c.name,
                       "", c.gt_count, "", "", Cell(c.ap50), Cell(c.ap50_95));
  }
  out += fmt::format(
      "operating point: best F1 {:.3f} at conf {:.3f}; at fixed conf {:.3f}: "
      "P {:.3f} R {:.3f}\n",
      report.best_f1.f1, report.best_f1.confidence, report.fixed.confidence,
      report.fixed.precision, report.fixed.recall);
  if (report.sequence_accuracy) {
    out += fmt::format("sequence accuracy: {:.4f}\n", *report.sequence_accuracy);
  }
  if (report.empty_ground_truth) out += "no ground truth: mAP undefined\n";
  return out;
}

std::string SweepTable(std::span<const OperatingPoint> points) {
  std::string out = fmt::format("{:>10} {:>10} {:>8} {:>8}\n", "conf",
                                "Precision", "Recall", "F1");
  for (const auto& p : points) {
    out += fmt::format("{:>10.3f} {:>10.3f} {:>8.3f} {:>8.3f}\n", p.confidence,
                       p.precision, p.recall, p.f1);
  }
  return out;
}

}  // namespace plateflow
