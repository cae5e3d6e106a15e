#include "scar/toml_lite.hpp"

#include <fstream>
#include <sstream>

#include "scar/rational.hpp"

namespace scar::io {

const std::string& TomlValue::as_string() const {
  if (!is_string()) throw Error("toml: value is not a string");
  return std::get<std::string>(data);
}

double TomlValue::as_number() const {
  if (!is_number()) throw Error("toml: value is not a number");
  return std::get<double>(data);
}

bool TomlValue::as_bool() const {
  if (!is_bool()) throw Error("toml: value is not a boolean");
  return std::get<bool>(data);
}

const std::vector<TomlValue>& TomlValue::as_array() const {
  if (!is_array()) throw Error("toml: value is not an array");
  return std::get<std::vector<TomlValue>>(data);
}

const TomlValue& TomlTable::at(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw Error("toml: missing key '" + key + "'");
  return it->second;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// removes a trailing comment outside of quotes
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

TomlValue parse_value(const std::string& raw, size_t line_no);

TomlValue parse_array(const std::string& raw, size_t line_no) {
  std::vector<TomlValue> items;
  std::string body = strip(raw.substr(1, raw.size() - 2));
  if (!body.empty()) {
    size_t depth = 0;
    bool quoted = false;
    std::string current;
    for (char ch : body) {
      if (ch == '"') quoted = !quoted;
      if (!quoted) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
          items.push_back(parse_value(strip(current), line_no));
          current.clear();
          continue;
        }
      }
      current.push_back(ch);
    }
    if (!strip(current).empty()) items.push_back(parse_value(strip(current), line_no));
  }
  TomlValue v;
  v.data = std::move(items);
  return v;
}

TomlValue parse_value(const std::string& raw, size_t line_no) {
  if (raw.empty()) throw Error("toml: empty value at line " + std::to_string(line_no));
  TomlValue v;
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"')
      throw Error("toml: unterminated string at line " + std::to_string(line_no));
    v.data = raw.substr(1, raw.size() - 2);
    return v;
  }
  if (raw.front() == '[') {
    if (raw.back() != ']') throw Error("toml: unterminated array at line " + std::to_string(line_no));
    return parse_array(raw, line_no);
  }
  if (raw == "true") {
    v.data = true;
    return v;
  }
  if (raw == "false") {
    v.data = false;
    return v;
  }
  try {
    size_t used = 0;
    const double num = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    v.data = num;
    return v;
  } catch (const std::exception&) {
    throw Error("toml: cannot parse value '" + raw + "' at line " + std::to_string(line_no));
  }
}

}  // namespace

TomlTable parse_toml(const std::string& text) {
  TomlTable root;
  TomlTable* current = &root;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      const bool array_table = line.size() > 1 && line[1] == '[';
      const size_t close = line.find(array_table ? "]]" : "]");
      if (close == std::string::npos)
        throw Error("toml: malformed table header at line " + std::to_string(line_no));
      const std::string name = strip(line.substr(array_table ? 2 : 1, close - (array_table ? 2 : 1)));
      if (name.empty()) throw Error("toml: empty table name at line " + std::to_string(line_no));
      if (array_table) {
        root.table_arrays[name].emplace_back();
        current = &root.table_arrays[name].back();
      } else {
        current = &root.tables[name];
      }
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("toml: expected key = value at line " + std::to_string(line_no));
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw Error("toml: empty key at line " + std::to_string(line_no));
    current->values[key] = parse_value(value, line_no);
  }
  return root;
}

TomlTable load_toml(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("toml: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_toml(text);
}

}  // namespace scar::io
