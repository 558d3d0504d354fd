// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The plateflow command line. Subcommands:
//
//   detect    plate (or character) detections per image, JSON Lines
//   read      plate strings per image, JSON Lines
//   eval      detection metrics against a YOLO-format dataset split
//   stats     counts and box-size distributions of a dataset split
//   seq-eval  exact-match sequence accuracy of readings against truth
//
// Exit codes: 0 success, 2 configuration error, 3 data error, 4 backend
// error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plateflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitBackend = 4;

inline constexpr char kFixturesEnv[] = "PLATEFLOW_FIXTURES";

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace plateflow::cli
