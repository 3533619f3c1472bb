#pragma once

namespace pick3d {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "pick3d";

}  // namespace pick3d
