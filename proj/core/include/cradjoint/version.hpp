#pragma once

namespace cradjoint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cradjoint
