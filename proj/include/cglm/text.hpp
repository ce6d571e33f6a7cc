#pragma once

// Locale-independent number <-> text conversion used by every file format.

#include <charconv>
#include <string>
#include <string_view>

#include "cglm/errors.hpp"

namespace cglm {

// Shortest text that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Parses the whole of `text` as a number; `what` names the field in errors.
template <class V>
V parse_number(std::string_view text, std::string_view what) {
  V out{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return out;
}

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace cglm
