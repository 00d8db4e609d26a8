#pragma once

namespace commval {

inline constexpr const char* kToolName = "commval";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace commval
