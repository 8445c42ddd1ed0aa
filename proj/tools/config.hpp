#pragma once

#include <map>
#include <optional>
#include <string>

namespace cli {

// Flat TOML-like run configuration: [section] headers, key = value pairs,
// '#' comments. Values are strings, numbers, or booleans; keys are addressed
// as "section.key".
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> get_number(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace cli
