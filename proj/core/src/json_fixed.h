// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

namespace plateflow::internal {

using Json = nlohmann::ordered_json;

// Compact single-line dump with every floating-point value printed in fixed
// notation with `decimals` digits. Non-finite floats become null.
std::string DumpFixed(const Json& j, int decimals = 6);

// Parses one JSON document; throws Error(kFormat) with `context` on failure.
Json ParseJson(const std::string& text, const std::string& context);

}  // namespace plateflow::internal
