#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace u1kepler {

// Shortest round-trip rendering; deterministic across runs.
inline std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

}  // namespace u1kepler
