#pragma once

#include <string>

#include "cradjoint/linalg.hpp"

namespace cradjoint::tool {

/// Parse "1.5", "-0.5i", "0.5+0.5i", "1e-3-2e-4i", "i", "-i".
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);

/// Render as a+bi with enough digits to round-trip.
std::string format_complex(Complex z);

}  // namespace cradjoint::tool
