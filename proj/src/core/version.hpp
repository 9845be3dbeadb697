#pragma once

namespace opconv {

inline constexpr const char* kVersion = "0.1.0";

}
