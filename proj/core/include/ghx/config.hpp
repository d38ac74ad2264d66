// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ghx/block_symbol.hpp"

namespace ghx {

// A system description loaded from JSON:
//   {"group": "torus:2" | "su2", "m": 2, "n": 1,
//    "grid": [[descriptor, ...], ...],          // m rows of n descriptors
//    "orders": [[tau, ...], ...]}               // optional per-entry override
// with descriptors
//   {"kind": "torus_poly", "coeffs": [{"alpha": [1,0], "re": 1, "im": 0}, ...]}
//   {"kind": "bessel", "s": 2}
//   {"kind": "su2_field", "axis": 3}
//   {"kind": "table", "path": "blocks.json", "order": 2}
// Table files map index strings ("3,4" or "l=3/2") to row-major complex
// matrices given as [re, im] pairs.
struct SystemConfig {
  GroupId group;
  int m = 1, n = 1;
  SystemSymbol system;
  std::string normalized_json;  // canonical config document embedded in reports
};

SystemConfig parse_system_config(const std::string& json_text, const std::string& origin);
SystemConfig load_system_config(const std::string& path);

}  // namespace ghx
