#pragma once

namespace distk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace distk
