#pragma once

namespace dircomplex {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dircomplex
