// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Inference sources. The pipeline only sees DetectorBackend, so everything
// downstream runs identically against replayed tensors or a live model.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plateflow/geometry.h"
#include "plateflow/image.h"
#include "plateflow/rawhead.h"

namespace plateflow {

inline constexpr int kModelInputSize = 640;

enum class ModelRole { kPlate, kCharacter };

struct ModelDescriptor {
  ModelRole role = ModelRole::kPlate;
  int num_classes = 1;
  int input_size = kModelInputSize;
  std::string variant;  // free-form provenance, e.g. "yolov8n"

  static ModelDescriptor Plate(std::string variant = {});
  static ModelDescriptor Character(std::string variant = {});

  // Throws Error(kInvalidArgument) if the class count does not fit the role.
  void Validate() const;
  int expected_rows() const { return 4 + num_classes; }
};

const char* ModelRoleName(ModelRole role);

// Letterboxed, channel-first RGB planes scaled to [0, 1], plus the
// transform that produced them.
struct PreprocessedInput {
  int size = 0;
  std::vector<float> chw;  // 3 * size * size
  LetterboxTransform transform;

  float at(int channel, int x, int y) const {
    return chw[(static_cast<std::size_t>(channel) * size + y) * size + x];
  }
};

// Bilinear resize by the letterbox scale into a square canvas filled with
// kLetterboxPadValue. The resized raster is placed at the rounded padding
// offsets; the transform keeps the exact ones.
PreprocessedInput Preprocess(const RgbImage& image,
                             int input_size = kModelInputSize);

class DetectorBackend {
 public:
  virtual ~DetectorBackend() = default;

  // `key` identifies the image (file stem, or a derived crop key); replay
  // backends use it, live backends ignore it.
  virtual RawHeadOutput Infer(std::string_view key,
                              const PreprocessedInput& input) = 0;
};

// Replays `<dir>/<key>.rawhead`. The directory is indexed once at
// construction and the files are read per call, so one instance may be
// shared across threads.
class RecordedBackend : public DetectorBackend {
 public:
  // With `descriptor`, every replayed tensor must have its row count.
  explicit RecordedBackend(const std::filesystem::path& dir,
                           std::optional<ModelDescriptor> descriptor = {});

  RawHeadOutput Infer(std::string_view key,
                      const PreprocessedInput& input) override;

  bool Has(std::string_view key) const;
  std::vector<std::string> Keys() const;

 private:
  std::filesystem::path dir_;
  std::optional<ModelDescriptor> descriptor_;
  std::map<std::string, std::filesystem::path, std::less<>> index_;
};

inline constexpr char kRawHeadExtension[] = ".rawhead";

// True when this build includes the ONNX runtime backend.
bool RuntimeBackendAvailable();

// Loads an ONNX model with one 1x3xSxS input and one (1x)(4+nc)xA output and
// checks the output rows against `desc`. Throws Error(kShape) on mismatch,
// Error(kIo) if the model cannot be loaded, Error(kUnavailable) when the
// build has no runtime. Instances are not thread-safe.
std::unique_ptr<DetectorBackend> MakeRuntimeBackend(
    const std::filesystem::path& model_file, const ModelDescriptor& desc);

}  // namespace plateflow
