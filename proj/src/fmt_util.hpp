#pragma once

#include <sstream>
#include <string>

namespace diamond::detail {

inline void fmt_step(std::ostringstream& out, std::string_view& pattern) {
  out << pattern;
  pattern = {};
}

template <class T, class... Rest>
void fmt_step(std::ostringstream& out, std::string_view& pattern, const T& v,
              const Rest&... rest) {
  const size_t pos = pattern.find("{}");
  if (pos == std::string_view::npos) {
    out << pattern;
    pattern = {};
    return;
  }
  out << pattern.substr(0, pos) << v;
  pattern.remove_prefix(pos + 2);
  fmt_step(out, pattern, rest...);
}

/// Minimal "{}" substitution, standing in for std::format on toolchains
/// without <format>.
template <class... Args>
std::string fmt(std::string_view pattern, const Args&... args) {
  std::ostringstream out;
  fmt_step(out, pattern, args...);
  return out.str();
}

}  // namespace diamond::detail
