// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plateflow {

enum class ErrorCode {
  kInvalidArgument,  // caller-supplied value out of contract
  kParse,            // malformed text input (label line, manifest, config)
  kIo,               // missing/unreadable file or directory
  kFormat,           // malformed binary or JSON artifact
  kNotFound,         // lookup by key failed
  kShape,            // tensor/model shape disagrees with a descriptor
  kDecode,           // non-finite value in a detector tensor
  kDomain,           // mathematically undefined result (e.g. log(0))
  kUnavailable,      // feature not compiled into this build
  kSchema,           // record carries an unsupported schema tag
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Label/manifest parse failure. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  enum class Kind {
    kTokenCount,
    kNotNumeric,
    kOutOfRange,
    kNegativeClass,
    kClassOutOfRange,
    kDuplicateName,
    kEmptyName,
    kCountMismatch,
    kSyntax,
  };

  ParseError(Kind kind, std::size_t line, const std::string& message);
  // Same kind and line, message prefixed with "<context>: ".
  ParseError(const ParseError& inner, const std::string& context);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace plateflow
