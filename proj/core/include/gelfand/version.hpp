#pragma once

namespace gelfand {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gelfand
