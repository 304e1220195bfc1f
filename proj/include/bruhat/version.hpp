#pragma once

namespace bruhat {

inline constexpr const char* kVersion = "1.0.0";

} // namespace bruhat
