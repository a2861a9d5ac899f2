#pragma once

namespace hqlat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hqlat
