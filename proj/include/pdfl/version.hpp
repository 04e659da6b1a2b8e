#pragma once

namespace pdfl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pdfl
