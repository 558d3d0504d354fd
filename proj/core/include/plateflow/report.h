// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>

#include "plateflow/metrics.h"

namespace plateflow {

// Single-line JSON tagged plateflow/report/1. Absent metrics are null.
// `settings` (resolved run settings) is echoed under "settings".
std::string ReportJson(const EvalReport& report,
                       const std::map<std::string, std::string>& settings = {});

// Per-class table: class_id,class,instances,predictions,ap50,ap50_95.
std::string ReportCsv(const EvalReport& report);

// Console table with Precision / Recall / mAP50 / mAP50-95 columns: one
// "all" row followed by one row per class with ground truth.
std::string ReportTable(const EvalReport& report);

std::string SweepTable(std::span<const OperatingPoint> points);

}  // namespace plateflow
