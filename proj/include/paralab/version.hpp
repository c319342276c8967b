#pragma once

namespace paralab {

inline constexpr const char* kToolName = "paralab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace paralab
