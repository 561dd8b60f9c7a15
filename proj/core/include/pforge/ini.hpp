#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pforge {

/// Configuration problem tied to an INI section and (optionally) property.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string section, std::string property, const std::string& message);

  const std::string& section() const { return section_; }
  const std::string& property() const { return property_; }

 private:
  std::string section_;
  std::string property_;
};

/// Minimal INI document: `[NAME]` headers, `name = value` properties, and
/// full-line `#` / `;` comments. Names are case-sensitive; surrounding
/// whitespace is trimmed from names and values.
class IniDocument {
 public:
  using Section = std::vector<std::pair<std::string, std::string>>;

  /// Throws ConfigError on malformed lines, properties outside a section, or
  /// duplicate sections/properties.
  static IniDocument parse(std::string_view text);

  bool has_section(const std::string& name) const { return sections_.count(name) != 0; }
  const Section* section(const std::string& name) const;
  std::optional<std::string> get(const std::string& section, const std::string& key) const;

 private:
  std::map<std::string, Section> sections_;
};

}  // namespace pforge
