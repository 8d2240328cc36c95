#pragma once

namespace mdim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mdim
