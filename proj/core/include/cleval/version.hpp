#pragma once

namespace cleval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cleval
