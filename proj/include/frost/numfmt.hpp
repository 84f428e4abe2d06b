#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace frost {

// Shortest decimal string that parses back to exactly this double.
inline std::string to_shortest_string(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// printf %.{sig}g rendering.
inline std::string to_sig_digits(double v, int sig) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig, v);
  return std::string(buf);
}

}  // namespace frost
