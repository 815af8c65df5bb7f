#pragma once

namespace kcut {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace kcut
