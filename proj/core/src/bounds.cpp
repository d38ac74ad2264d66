// SPDX-License-Identifier: Apache-2.0
#include "ghx/bounds.hpp"

#include <cmath>

#include <Eigen/LU>

namespace ghx {

double det_hs_lower(const ComplexMatrix& A) {
  if (A.rows() != A.cols()) throw Error("det_hs_lower: matrix must be square");
  const auto l = A.rows();
  if (l < 2) throw Error("det_hs_lower: undefined for size 1; use |det| directly");
  if (!A.allFinite()) throw Error("det_hs_lower: non-finite entries");
  const double hs2 = A.squaredNorm();
  if (hs2 == 0.0) return 0.0;
  const double det = std::abs(Eigen::PartialPivLU<ComplexMatrix>(A).determinant());
  return det * std::pow(static_cast<double>(l - 1) / hs2, 0.5 * (l - 1));
}

namespace {

double det_chain_from_blocks(const ComplexMatrix& assembled, std::int64_t total) {
  const double hs2 = assembled.squaredNorm();  // equals the sum of block HS^2
  if (hs2 == 0.0) return 0.0;
  const double det =
      std::abs(Eigen::PartialPivLU<ComplexMatrix>(assembled).determinant());
  return min_halfpower_constant() * det * std::pow(hs2, -0.5 * (total - 1));
}

}  // namespace

double det_chain_lower(const SystemSymbol& sys, const RepIndex& xi) {
  if (!sys.square()) throw Error("det_chain_lower: system must be square");
  const auto meta = rep_meta(sys.group, xi);
  const auto total = static_cast<std::int64_t>(sys.m) * meta.dim;
  if (total < 2) throw Error("det_chain_lower: undefined for size 1; use |det| directly");
  return det_chain_from_blocks(assemble(sys, xi), total);
}

double min_halfpower_constant() { return std::exp(-1.0 / (2.0 * std::exp(1.0))); }

DominanceResult block_dominance(const std::vector<ComplexMatrix>& blocks, int m,
                                BlockNorm norm) {
  if (m < 1 || blocks.size() != static_cast<std::size_t>(m) * m)
    throw Error("block_dominance: expected a square m x m grid");
  const auto d = blocks[0].rows();
  for (const auto& b : blocks)
    if (b.rows() != d || b.cols() != d)
      throw Error("block_dominance: blocks must share one square size");

  DominanceResult res;
  res.alpha = res.beta = std::numeric_limits<double>::infinity();
  for (int l = 0; l < m; ++l) {
    const ComplexMatrix& diag = blocks[static_cast<std::size_t>(l) * m + l];
    double inv_norm = 0.0;
    if (norm == BlockNorm::Max) {
      Eigen::FullPivLU<ComplexMatrix> lu(diag);
      if (!lu.isInvertible()) {
        res.dominant = false;
        res.alpha = res.beta = 0.0;
        res.reason = "singular diagonal block " + std::to_string(l);
        return res;
      }
      inv_norm = 1.0 / max_abs_norm(lu.inverse());
    } else {
      inv_norm = smallest_singular_value(diag);
    }
    double row_sum = 0.0, col_sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (i == l) continue;
      const auto block_norm = [&](const ComplexMatrix& b) {
        return norm == BlockNorm::Max ? max_abs_norm(b) : op_norm(b);
      };
      row_sum += block_norm(blocks[static_cast<std::size_t>(l) * m + i]);
      col_sum += block_norm(blocks[static_cast<std::size_t>(i) * m + l]);
    }
    res.alpha = std::min(res.alpha, inv_norm - row_sum);
    res.beta = std::min(res.beta, inv_norm - col_sum);
  }
  res.dominant = res.alpha > 0.0 && res.beta > 0.0;
  if (!res.dominant)
    res.reason = "nonpositive dominance slack";
  else if (std::min(res.alpha, res.beta) < kMarginalSlack)
    res.marginal = true;
  return res;
}

std::optional<double> varah_lower(const std::vector<ComplexMatrix>& blocks, int m,
                                  BlockNorm norm) {
  const auto res = block_dominance(blocks, m, norm);
  if (!res.dominant) return std::nullopt;
  return std::sqrt(res.alpha * res.beta);
}

BoundReport make_bound_report(const SystemSymbol& sys, const BlockEvaluation& ev) {
  BoundReport report;
  if (!sys.square()) return report;

  const auto total = static_cast<std::int64_t>(sys.m) * ev.dim;
  const double abs_det = std::abs(ev.det);
  if (total == 1) {
    // Size-1 bypass: |det| is lambda_min itself.
    report.det_hs = abs_det;
    report.det_chain = abs_det;
  } else {
    report.det_hs = det_hs_lower(ev.matrix);
    report.det_chain = det_chain_from_blocks(ev.matrix, total);
  }

  const auto blocks = extract_blocks(ev.matrix, sys.m, sys.n, ev.dim);
  const auto dom_max = block_dominance(blocks, sys.m, BlockNorm::Max);
  const auto dom_op = block_dominance(blocks, sys.m, BlockNorm::Op);
  report.dominant_max = dom_max.dominant;
  report.dominant_op = dom_op.dominant;
  report.marginal = dom_max.marginal || dom_op.marginal;
  if (dom_max.dominant) report.varah = std::sqrt(dom_max.alpha * dom_max.beta);
  if (dom_op.dominant) report.varah_relaxed = std::sqrt(dom_op.alpha * dom_op.beta);
  return report;
}

}  // namespace ghx
