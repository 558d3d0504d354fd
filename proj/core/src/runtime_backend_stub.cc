// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/backend.h"
#include "plateflow/error.h"

namespace plateflow {

bool RuntimeBackendAvailable() { return false; }

std::unique_ptr<DetectorBackend> MakeRuntimeBackend(
    const std::filesystem::path& /*model_file*/, const ModelDescriptor& /*desc*/) {
  throw Error(ErrorCode::kUnavailable,
              "this build has no ONNX runtime backend (PLATEFLOW_WITH_DNN=OFF)");
}

}  // namespace plateflow
