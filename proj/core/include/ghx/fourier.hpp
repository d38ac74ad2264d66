// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ghx/coefficient_field.hpp"

namespace ghx {

// Samples of a C^n-valued function on the uniform grid x_j = 2 pi j / N of
// T^r, j in {0, ..., N-1}^r in row-major order.
struct GridFunction {
  int r = 1;
  int grid_size = 2;  // N per axis, even
  int n = 1;
  std::vector<Eigen::VectorXcd> values;  // one n-vector per grid point

  std::size_t point_count() const;
  void validate() const;
  static GridFunction zeros(int r, int grid_size, int n);
};

// Componentwise DFT with 1/N^r normalization; frequencies live in the
// symmetric band [-N/2, N/2)^r. Exact on trigonometric polynomials whose
// spectrum fits the band.
CoefficientField forward(const GridFunction& f);

// Trigonometric synthesis on the N-point grid. The support of c must fit
// inside [-N/2, N/2)^r.
GridFunction inverse(const CoefficientField& c, int grid_size);

struct PlancherelResult {
  double lhs = 0.0;  // grid quadrature of ||f||_{L^2}^2
  double rhs = 0.0;  // Sum_xi d_xi ||u(xi)||_HS^2
  double rel_error = 0.0;
};

PlancherelResult plancherel_check(const GridFunction& f);

// Runs a polynomial multiplier system along two routes: coefficient-side
// block action followed by synthesis, against a direct per-term evaluation
// from the symbols' coefficient lists. Returns the maximum pointwise
// difference on the grid. Rejects systems with non-polynomial entries.
double quantization_check(const SystemSymbol& sys, const GridFunction& f);

}  // namespace ghx
