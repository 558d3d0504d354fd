// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "json_fixed.h"

#include <cmath>

#include <fmt/format.h>

#include "plateflow/error.h"

namespace plateflow::internal {
namespace {

void Dump(const Json& j, int decimals, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        Dump(v, decimals, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        Dump(v, decimals, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      std::string s = fmt::format("{:.{}f}", v, decimals);
      if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
      }
      out += s;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string DumpFixed(const Json& j, int decimals) {
  std::string out;
  Dump(j, decimals, out);
  return out;
}

Json ParseJson(const std::string& text, const std::string& context) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, fmt::format("{}: {}", context, e.what()));
  }
}

}  // namespace plateflow::internal
