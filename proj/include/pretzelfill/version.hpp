#pragma once

namespace pretzelfill {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pretzelfill
