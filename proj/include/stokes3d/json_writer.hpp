#pragma once

#include <string>

#include "json.hpp"

namespace stokes3d {

using json = nlohmann::ordered_json;

// 17-significant-digit rendering; non-finite values throw SerializationError
// rather than leaking "nan" into a report.
std::string format_real(double v);

// Deterministic serializer: insertion key order, fixed indentation, every
// float through format_real.
std::string write_json(const json& j, int indent = 2);

}  // namespace stokes3d
