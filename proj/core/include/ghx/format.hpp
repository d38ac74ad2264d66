// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace ghx {

// Shortest form with up to 17 significant digits; round-trips doubles and is
// byte-stable across runs.
std::string format_double(double v);

}  // namespace ghx
