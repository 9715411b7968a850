#pragma once

namespace spanind {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spanind
