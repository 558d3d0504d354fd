// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/error.h"

namespace plateflow {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kIo:
      return "i/o error";
    case ErrorCode::kFormat:
      return "format error";
    case ErrorCode::kNotFound:
      return "not found";
    case ErrorCode::kShape:
      return "shape mismatch";
    case ErrorCode::kDecode:
      return "decode error";
    case ErrorCode::kDomain:
      return "domain error";
    case ErrorCode::kUnavailable:
      return "unavailable";
    case ErrorCode::kSchema:
      return "unsupported schema";
  }
  return "unknown";
}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : Error(ErrorCode::kParse,
            line > 0 ? "line " + std::to_string(line) + ": " + message
                     : message),
      kind_(kind),
      line_(line) {}

ParseError::ParseError(const ParseError& inner, const std::string& context)
    : Error(ErrorCode::kParse, context + ": " + inner.what()),
      kind_(inner.kind_),
      line_(inner.line_) {}

}  // namespace plateflow
