#ifndef CONFALG_SRC_TEXT_UTIL_HPP
#define CONFALG_SRC_TEXT_UTIL_HPP

#include <string>
#include <string_view>

namespace confalg::detail {

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Strips a trailing '#' comment and surrounding blanks.
inline std::string content_of(std::string_view line) { return trim(line.substr(0, line.find('#'))); }

}  // namespace confalg::detail

#endif  // CONFALG_SRC_TEXT_UTIL_HPP
