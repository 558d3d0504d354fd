// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fmt/format.h>
#include <opencv2/dnn.hpp>

#include "plateflow/backend.h"
#include "plateflow/error.h"

namespace plateflow {
namespace {

class DnnBackend : public DetectorBackend {
 public:
  DnnBackend(const std::filesystem::path& model_file, ModelDescriptor desc)
      : desc_(std::move(desc)) {
    desc_.Validate();
    if (!std::filesystem::is_regular_file(model_file)) {
      throw Error(ErrorCode::kIo, "model not found: " + model_file.string());
    }
    try {
      net_ = cv::dnn::readNetFromONNX(model_file.string());
    } catch (const cv::Exception& e) {
      throw Error(ErrorCode::kIo,
                  fmt::format("cannot load model {}: {}", model_file.string(),
                              e.what()));
    }
    if (net_.empty()) {
      throw Error(ErrorCode::kIo, "cannot load model " + model_file.string());
    }
    net_.setPreferableBackend(cv::dnn::DNN_BACKEND_OPENCV);
    net_.setPreferableTarget(cv::dnn::DNN_TARGET_CPU);

    // Probe the declared output shape with a blank input.
    PreprocessedInput probe;
    probe.size = desc_.input_size;
    probe.chw.assign(3 * static_cast<std::size_t>(probe.size) * probe.size, 0.f);
    const RawHeadOutput out = Run(probe);
    if (out.rows() != desc_.expected_rows()) {
      throw Error(ErrorCode::kShape,
                  fmt::format("model {} outputs {} rows per anchor, {} "
                              "descriptor expects {} (4 + {} classes)",
                              model_file.string(), out.rows(),
                              ModelRoleName(desc_.role), desc_.expected_rows(),
                              desc_.num_classes));
    }
  }

  RawHeadOutput Infer(std::string_view /*key*/,
                      const PreprocessedInput& input) override {
    if (input.size != desc_.input_size) {
      throw Error(ErrorCode::kShape,
                  fmt::format("input is {}px, model expects {}px", input.size,
                              desc_.input_size));
    }
    return Run(input);
  }

 private:
  RawHeadOutput Run(const PreprocessedInput& input) {
    const int dims[4] = {1, 3, input.size, input.size};
    cv::Mat blob(4, dims, CV_32F);
    std::copy(input.chw.begin(), input.chw.end(), blob.ptr<float>());
    cv::Mat out;
    try {
      net_.setInput(blob);
      out = net_.forward();
    } catch (const cv::Exception& e) {
      throw Error(ErrorCode::kShape,
                  fmt::format("model inference failed: {}", e.what()));
    }
    int rows = 0;
    int cols = 0;
    if (out.dims == 3 && out.size[0] == 1) {
      rows = out.size[1];
      cols = out.size[2];
    } else if (out.dims == 2) {
      rows = out.size[0];
      cols = out.size[1];
    } else {
      throw Error(ErrorCode::kShape,
                  fmt::format("unsupported model output rank {}", out.dims));
    }
    if (out.type() != CV_32F || !out.isContinuous()) {
      throw Error(ErrorCode::kShape, "model output must be contiguous float32");
    }
    const float* p = out.ptr<float>();
    return RawHeadOutput(rows, cols,
                         std::vector<float>(p, p + static_cast<std::size_t>(rows) * cols));
  }

  ModelDescriptor desc_;
  cv::dnn::Net net_;
};

}  // namespace

bool RuntimeBackendAvailable() { return true; }

std::unique_ptr<DetectorBackend> MakeRuntimeBackend(
    const std::filesystem::path& model_file, const ModelDescriptor& desc) {
  return std::make_unique<DnnBackend>(model_file, desc);
}

}  // namespace plateflow
