#pragma once

#define ORBSURF_VERSION "0.1.0"

namespace orbsurf {
inline constexpr const char* version = ORBSURF_VERSION;
}
