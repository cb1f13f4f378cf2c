#pragma once

namespace barriers {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace barriers
