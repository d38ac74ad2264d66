// SPDX-License-Identifier: Apache-2.0
#include "ghx/format.hpp"

#include <cstdio>

namespace ghx {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ghx
