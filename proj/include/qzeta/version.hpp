#pragma once

namespace qzeta {

inline constexpr const char* kToolName = "qzeta";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace qzeta
