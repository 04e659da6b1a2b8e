#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace pdfl {

/// Shortest decimal string that parses back to exactly x; infinities become
/// "inf"/"-inf".  Used everywhere a value is written, so output is
/// platform-stable and lossless.
inline std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return {buf, end};
}

/// Parses a full token as a double ("inf"/"-inf" included); nullopt on any
/// trailing garbage or empty input.
inline std::optional<double> parse_double(std::string_view token) {
  double out = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [p, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || p != last) return std::nullopt;
  return out;
}

inline std::optional<int> parse_int(std::string_view token) {
  int out = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [p, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || p != last) return std::nullopt;
  return out;
}

}  // namespace pdfl
