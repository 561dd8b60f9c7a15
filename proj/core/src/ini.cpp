#include "pforge/ini.hpp"

#include <algorithm>

namespace pforge {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::string describe(const std::string& section, const std::string& property) {
  std::string where = section.empty() ? "config" : "[" + section + "]";
  if (!property.empty()) where += " " + property;
  return where;
}

}  // namespace

ConfigError::ConfigError(std::string section, std::string property, const std::string& message)
    : std::runtime_error(describe(section, property) + ": " + message),
      section_(std::move(section)),
      property_(std::move(property)) {}

IniDocument IniDocument::parse(std::string_view text) {
  IniDocument doc;
  Section* current = nullptr;
  std::string current_name;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("", "", where + ": unterminated section header");
      current_name = std::string(trim(line.substr(1, line.size() - 2)));
      if (current_name.empty()) throw ConfigError("", "", where + ": empty section name");
      auto [it, inserted] = doc.sections_.try_emplace(current_name);
      if (!inserted) throw ConfigError(current_name, "", where + ": duplicate section");
      current = &it->second;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(current_name, "", where + ": expected 'name = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(current_name, "", where + ": empty property name");
    if (current == nullptr)
      throw ConfigError("", key, where + ": property appears before any section header");
    const bool duplicate = std::any_of(current->begin(), current->end(),
                                       [&](const auto& kv) { return kv.first == key; });
    if (duplicate) throw ConfigError(current_name, key, where + ": duplicate property");
    current->emplace_back(std::move(key), std::move(value));
  }
  return doc;
}

const IniDocument::Section* IniDocument::section(const std::string& name) const {
  auto it = sections_.find(name);
  return it == sections_.end() ? nullptr : &it->second;
}

std::optional<std::string> IniDocument::get(const std::string& section,
                                            const std::string& key) const {
  const Section* s = this->section(section);
  if (s == nullptr) return std::nullopt;
  for (const auto& [k, v] : *s) {
    if (k == key) return v;
  }
  return std::nullopt;
}

}  // namespace pforge
