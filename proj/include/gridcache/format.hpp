#pragma once

#include <charconv>
#include <string>

namespace gridcache {

/// Shortest round-trip decimal form; identical on every platform that
/// implements std::to_chars correctly.
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace gridcache
