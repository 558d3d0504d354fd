// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "settings.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace plateflow::cli {

namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void Settings::Set(const std::string& key, std::string value, std::string source) {
  if (!known_.count(key)) {
    throw ConfigError(fmt::format("{}: unknown setting '{}'", source, key));
  }
  values_[key] = {std::move(value), std::move(source)};
}

void Settings::SetDefault(const std::string& key, std::string value) {
  Set(key, std::move(value), "default " + key);
}

void Settings::SetFlag(const std::string& key, std::string value) {
  Set(key, std::move(value), "--" + key);
}

void Settings::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  ParseText(ss.str(), "config file " + path.string());
}

void Settings::ParseText(std::string_view text, const std::string& origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(
          fmt::format("{} line {}: expected 'key = value'", origin, line_no));
    }
    const std::string key = Trim(std::string_view(line).substr(0, eq));
    const std::string value = Trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(fmt::format("{} line {}: empty key", origin, line_no));
    }
    Set(key, value, fmt::format("{} line {} ({})", origin, line_no, key));
  }
}

bool Settings::Has(const std::string& key) const {
  const auto it = values_.find(key);
  return it != values_.end() && !it->second.text.empty();
}

std::string Settings::Get(const std::string& key) const {
  const auto it = values_.find(key);
  return it == values_.end() ? std::string() : it->second.text;
}

std::optional<std::string> Settings::Find(const std::string& key) const {
  if (!Has(key)) return std::nullopt;
  return Get(key);
}

std::string Settings::Source(const std::string& key) const {
  const auto it = values_.find(key);
  return it == values_.end() ? "--" + key : it->second.source;
}

double Settings::GetUnit(const std::string& key) const {
  const std::string text = Get(key);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", Source(key), text));
  }
  if (v < 0.0 || v > 1.0) {
    throw ConfigError(
        fmt::format("{}: must be in [0, 1], got {}", Source(key), text));
  }
  return v;
}

int Settings::GetPositiveInt(const std::string& key) const {
  const std::string text = Get(key);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", Source(key), text));
  }
  if (v < 1) {
    throw ConfigError(fmt::format("{}: must be >= 1, got {}", Source(key), text));
  }
  return v;
}

bool Settings::GetBool(const std::string& key) const {
  const std::string text = Get(key);
  if (text.empty() || text == "false" || text == "0") return false;
  if (text == "true" || text == "1") return true;
  throw ConfigError(
      fmt::format("{}: expected true or false, got '{}'", Source(key), text));
}

std::string Settings::GetChoice(
    const std::string& key, std::initializer_list<std::string_view> allowed) const {
  const std::string text = Get(key);
  for (auto a : allowed) {
    if (text == a) return text;
  }
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw ConfigError(
      fmt::format("{}: expected {}, got '{}'", Source(key), list, text));
}

std::map<std::string, std::string> Settings::Resolved() const {
  std::map<std::string, std::string> out;
  for (const auto& [key, v] : values_) {
    if (key == "config" || key == "save-config") continue;
    out[key] = v.text;
  }
  return out;
}

std::string Settings::Dump() const {
  std::string out;
  for (const auto& [key, value] : Resolved()) {
    out += fmt::format("{} = {}\n", key, value);
  }
  return out;
}

}  // namespace plateflow::cli
