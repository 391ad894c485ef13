#pragma once

namespace starpres {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace starpres
