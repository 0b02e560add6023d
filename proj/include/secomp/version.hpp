#pragma once

namespace secomp {

inline constexpr const char* kToolName = "secomp";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace secomp
