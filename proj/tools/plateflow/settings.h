// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Layered run settings: built-in defaults, then a config file, then flags.
//
// Config files are flat "key = value" text, one setting per line. Keys are
// the long flag names without dashes; '#' starts a comment; booleans are
// true/false. Example:
//
//   # replay run over the committed fixtures
//   backend = recorded
//   fixtures = tests/fixtures/lpr/recorded
//   conf = 0.25
//   nms-iou = 0.45
//   workers = 4

#pragma once

#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plateflow::cli {

// A user-facing configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Settings {
 public:
  explicit Settings(std::set<std::string> known_keys)
      : known_(std::move(known_keys)) {}

  void SetDefault(const std::string& key, std::string value);
  // Reads a config file; unknown keys and malformed lines are ConfigErrors.
  void LoadFile(const std::filesystem::path& path);
  void ParseText(std::string_view text, const std::string& origin);
  void SetFlag(const std::string& key, std::string value);

  bool Has(const std::string& key) const;
  std::string Get(const std::string& key) const;  // "" when unset
  std::optional<std::string> Find(const std::string& key) const;

  // Typed getters; errors name where the bad value came from.
  double GetUnit(const std::string& key) const;  // in [0, 1]
  int GetPositiveInt(const std::string& key) const;
  bool GetBool(const std::string& key) const;
  std::string GetChoice(const std::string& key,
                        std::initializer_list<std::string_view> allowed) const;

  // "--conf" for a flag, "config file x.cfg line 3 (conf)" for a file value.
  std::string Source(const std::string& key) const;

  // Resolved settings (excluding config/save-config), sorted by key.
  std::map<std::string, std::string> Resolved() const;
  // Resolved() in config-file syntax.
  std::string Dump() const;

 private:
  struct Value {
    std::string text;
    std::string source;
  };
  void Set(const std::string& key, std::string value, std::string source);

  std::set<std::string> known_;
  std::map<std::string, Value> values_;
};

}  // namespace plateflow::cli
