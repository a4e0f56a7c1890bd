#pragma once

namespace zsschur {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zsschur
