#pragma once

namespace expstab {

inline constexpr const char* kToolName = "expstab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace expstab
