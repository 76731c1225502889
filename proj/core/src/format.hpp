#pragma once

#include <cstdio>
#include <string>

namespace gelfand::detail {

/// Fixed %.17g rendering used everywhere a double becomes report text.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace gelfand::detail
