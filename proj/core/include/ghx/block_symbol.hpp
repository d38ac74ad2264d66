// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ghx/symbol.hpp"

namespace ghx {

double hs_norm(const ComplexMatrix& A);
double op_norm(const ComplexMatrix& A);       // largest singular value
double max_abs_norm(const ComplexMatrix& A);  // entrywise max modulus

// min ||A v||_2 over unit vectors v. Equals the smallest singular value of a
// full SVD for square and tall matrices; wide matrices have a nontrivial
// kernel, so the minimum is exactly zero.
double smallest_singular_value(const ComplexMatrix& A);

// Relative threshold under which a computed smallest singular value is
// reported as an exact zero.
inline constexpr double kNumericalZeroRel = 1e-12;

// m x n grid of scalar symbols over one group; evaluation assembles the
// (m d_xi) x (n d_xi) block matrix.
struct SystemSymbol {
  GroupId group;
  int m = 1, n = 1;
  std::vector<ScalarSymbol> grid;  // row-major, m*n entries

  const ScalarSymbol& at(int j, int i) const;  // row j, column i
  bool square() const { return m == n; }
};

SystemSymbol make_system(GroupId group, int m, int n, std::vector<ScalarSymbol> grid);

// Dense block matrix with block (j, i) = grid[j][i](xi).
ComplexMatrix assemble(const SystemSymbol& sys, const RepIndex& xi);

// Blockwise action on an n x 1 stack of d_xi x d_xi blocks; block j of the
// result is Sum_i grid[j][i](xi) u_i.
std::vector<ComplexMatrix> apply(const SystemSymbol& sys, const RepIndex& xi,
                                 const std::vector<ComplexMatrix>& u);

struct BlockEvaluation {
  RepIndex xi;
  double bracket = 1.0;
  std::int64_t dim = 1;
  ComplexMatrix matrix;
  double lambda_min = 0.0;      // floored to zero below the numerical-zero threshold
  double raw_lambda_min = 0.0;  // smallest singular value as computed
  bool zero_flag = false;
  double hs = 0.0;
  double op = 0.0;
  bool square = false;
  Complex det{0.0, 0.0};  // LU determinant; meaningful only when square
};

BlockEvaluation evaluate(const SystemSymbol& sys, const RepIndex& xi);

// Row-major m*n sub-blocks of size d x d of an (m d) x (n d) matrix.
std::vector<ComplexMatrix> extract_blocks(const ComplexMatrix& A, int m, int n,
                                          std::int64_t d);

}  // namespace ghx
