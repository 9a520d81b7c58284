#pragma once

namespace stlat {
inline constexpr const char *kVersion = "0.1.0";
}
