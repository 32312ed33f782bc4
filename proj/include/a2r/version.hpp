#pragma once

namespace a2r {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace a2r
