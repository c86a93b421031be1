#pragma once

namespace gcmforge {
inline constexpr const char* kToolVersion = "0.1.0";
}
