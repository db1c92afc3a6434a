#pragma once

namespace subsums {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subsums
