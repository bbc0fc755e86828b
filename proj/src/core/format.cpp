#include "rglab/core/format.hpp"

#include <cstdio>

namespace rglab {

std::string format_fixed(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  std::string out(buf);
  if (out == "-0" || out.rfind("-0.", 0) == 0) {
    // collapse negative zero so renderings stay canonical
    bool nonzero = false;
    for (char c : out) nonzero |= (c >= '1' && c <= '9');
    if (!nonzero) out.erase(out.begin());
  }
  return out;
}

}  // namespace rglab
