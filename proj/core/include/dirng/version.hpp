#pragma once

namespace dirng {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dirng
