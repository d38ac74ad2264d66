// SPDX-License-Identifier: Apache-2.0
#include "ghx/block_symbol.hpp"

#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace ghx {

namespace {

Eigen::VectorXd singular_values(const ComplexMatrix& A) {
  // Jacobi is the accuracy workhorse at desk sizes; divide-and-conquer takes
  // over for the larger SU(2) stacks.
  if (std::max(A.rows(), A.cols()) <= 32)
    return Eigen::JacobiSVD<ComplexMatrix>(A).singularValues();
  return Eigen::BDCSVD<ComplexMatrix>(A).singularValues();
}

}  // namespace

double hs_norm(const ComplexMatrix& A) { return A.norm(); }

double op_norm(const ComplexMatrix& A) {
  if (A.size() == 0) return 0.0;
  if (!A.allFinite()) throw Error("op_norm: non-finite entries");
  return singular_values(A)(0);
}

double max_abs_norm(const ComplexMatrix& A) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      best = std::max(best, std::abs(A(i, j)));
  return best;
}

double smallest_singular_value(const ComplexMatrix& A) {
  if (A.size() == 0) throw Error("smallest_singular_value: empty matrix");
  if (!A.allFinite()) throw Error("smallest_singular_value: non-finite entries");
  if (A.cols() > A.rows()) return 0.0;  // nontrivial kernel
  const auto sv = singular_values(A);
  return sv(sv.size() - 1);
}

const ScalarSymbol& SystemSymbol::at(int j, int i) const {
  if (j < 0 || j >= m || i < 0 || i >= n) throw Error("system grid index out of range");
  return grid[static_cast<std::size_t>(j) * n + i];
}

SystemSymbol make_system(GroupId group, int m, int n, std::vector<ScalarSymbol> grid) {
  if (m < 1 || n < 1) throw Error("system shape must be positive");
  if (grid.size() != static_cast<std::size_t>(m) * n)
    throw Error("system grid has " + std::to_string(grid.size()) + " entries, expected " +
                std::to_string(m * n));
  return SystemSymbol{std::move(group), m, n, std::move(grid)};
}

namespace {

ComplexMatrix eval_block(const SystemSymbol& sys, int j, int i, const RepIndex& xi,
                         std::int64_t d) {
  ComplexMatrix block = sys.at(j, i)(xi);
  if (block.rows() != d || block.cols() != d)
    throw Error("symbol '" + sys.at(j, i).name() + "' produced a " +
                std::to_string(block.rows()) + "x" + std::to_string(block.cols()) +
                " block at xi=" + xi.to_string() + ", expected " + std::to_string(d) +
                "x" + std::to_string(d));
  if (!block.allFinite())
    throw Error("symbol '" + sys.at(j, i).name() + "' produced non-finite entries at xi=" +
                xi.to_string());
  return block;
}

}  // namespace

ComplexMatrix assemble(const SystemSymbol& sys, const RepIndex& xi) {
  const auto meta = rep_meta(sys.group, xi);
  const auto d = meta.dim;
  ComplexMatrix A(sys.m * d, sys.n * d);
  for (int j = 0; j < sys.m; ++j)
    for (int i = 0; i < sys.n; ++i)
      A.block(j * d, i * d, d, d) = eval_block(sys, j, i, xi, d);
  return A;
}

std::vector<ComplexMatrix> apply(const SystemSymbol& sys, const RepIndex& xi,
                                 const std::vector<ComplexMatrix>& u) {
  const auto meta = rep_meta(sys.group, xi);
  const auto d = meta.dim;
  if (u.size() != static_cast<std::size_t>(sys.n))
    throw Error("apply: expected " + std::to_string(sys.n) + " blocks, got " +
                std::to_string(u.size()));
  for (const auto& block : u)
    if (block.rows() != d || block.cols() != d)
      throw Error("apply: input block shape mismatch at xi=" + xi.to_string());
  std::vector<ComplexMatrix> out;
  out.reserve(sys.m);
  for (int j = 0; j < sys.m; ++j) {
    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < sys.n; ++i) acc += eval_block(sys, j, i, xi, d) * u[i];
    out.push_back(std::move(acc));
  }
  return out;
}

BlockEvaluation evaluate(const SystemSymbol& sys, const RepIndex& xi) {
  const auto meta = rep_meta(sys.group, xi);
  BlockEvaluation ev;
  ev.xi = xi;
  ev.bracket = meta.bracket;
  ev.dim = meta.dim;
  ev.matrix = assemble(sys, xi);
  ev.hs = hs_norm(ev.matrix);
  const auto sv = singular_values(ev.matrix);
  ev.op = sv(0);
  ev.raw_lambda_min =
      ev.matrix.cols() > ev.matrix.rows() ? 0.0 : sv(sv.size() - 1);
  ev.zero_flag = ev.raw_lambda_min < kNumericalZeroRel * std::max(1.0, ev.hs);
  ev.lambda_min = ev.zero_flag ? 0.0 : ev.raw_lambda_min;
  ev.square = ev.matrix.rows() == ev.matrix.cols();
  if (ev.square) ev.det = Eigen::PartialPivLU<ComplexMatrix>(ev.matrix).determinant();
  return ev;
}

std::vector<ComplexMatrix> extract_blocks(const ComplexMatrix& A, int m, int n,
                                          std::int64_t d) {
  if (A.rows() != m * d || A.cols() != n * d)
    throw Error("extract_blocks: shape mismatch");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(m) * n);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) blocks.push_back(A.block(j * d, i * d, d, d));
  return blocks;
}

}  // namespace ghx
