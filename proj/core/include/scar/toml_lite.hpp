#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace scar::io {

/// Minimal TOML reader covering the subset used by experiment configs:
/// scalar keys (string/number/bool), homogeneous arrays, [tables], and
/// [[arrays of tables]]. Dotted keys, inline tables, and dates are out
/// of scope.
struct TomlValue {
  std::variant<std::string, double, bool, std::vector<TomlValue>> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_array() const { return std::holds_alternative<std::vector<TomlValue>>(data); }
  const std::string& as_string() const;
  double as_number() const;
  bool as_bool() const;
  const std::vector<TomlValue>& as_array() const;
};

struct TomlTable {
  std::map<std::string, TomlValue> values;
  std::map<std::string, TomlTable> tables;
  std::map<std::string, std::vector<TomlTable>> table_arrays;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  const TomlValue& at(const std::string& key) const;
};

TomlTable parse_toml(const std::string& text);
TomlTable load_toml(const std::string& path);

}  // namespace scar::io
