#pragma once

#include <string>

namespace rglab {

// Fixed-precision decimal rendering, locale-independent. Used wherever a
// number ends up in an observation, report or golden file so equal inputs
// always produce equal bytes.
std::string format_fixed(double value, int precision);

}  // namespace rglab
