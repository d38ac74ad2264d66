// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ghx/block_symbol.hpp"

namespace ghx {

// |det A| ((l-1) / ||A||_HS^2)^{(l-1)/2} for square A of size l >= 2.
// The size-1 case is rejected; callers use |det| = lambda_min directly.
double det_hs_lower(const ComplexMatrix& A);

// e^{-1/(2e)} |det sigma_P(xi)| (Sum_{j,i} ||sigma_{P_{ji}}(xi)||_HS^2)^{-(m d - 1)/2}
// for a square system with m d_xi >= 2. Never exceeds det_hs_lower of the
// assembled matrix.
double det_chain_lower(const SystemSymbol& sys, const RepIndex& xi);

// min over x > 0 of x^{x/2} = e^{-1/(2e)}, attained at x = 1/e.
double min_halfpower_constant();

enum class BlockNorm {
  Max,  // entrywise max modulus; diagonal blocks are inverted explicitly
  Op    // operator norm off the diagonal, lambda_min on the diagonal
};

// Slack below which a strict dominance comparison is flagged as marginal.
inline constexpr double kMarginalSlack = 1e-12;

struct DominanceResult {
  bool dominant = false;
  double alpha = 0.0;  // min over rows of the row slack
  double beta = 0.0;   // min over rows of the column slack
  bool marginal = false;
  std::string reason;  // set when not dominant
};

// Block diagonal dominance by rows and columns for a square m x m grid of
// equal-size square blocks (row-major). Strict inequalities, zero tolerance.
DominanceResult block_dominance(const std::vector<ComplexMatrix>& blocks, int m,
                                BlockNorm norm);

// sqrt(alpha beta) when dominant under the chosen norm, nullopt otherwise.
// BlockNorm::Max is the Varah bound; BlockNorm::Op is its relaxation with
// lambda_min on the diagonal.
std::optional<double> varah_lower(const std::vector<ComplexMatrix>& blocks, int m,
                                  BlockNorm norm);

struct BoundReport {
  std::optional<double> det_hs;        // absent for non-square systems
  std::optional<double> det_chain;     // absent for non-square systems
  std::optional<double> varah;         // absent when not max-norm dominant
  std::optional<double> varah_relaxed; // absent when not op-norm dominant
  bool dominant_max = false;
  bool dominant_op = false;
  bool marginal = false;
};

BoundReport make_bound_report(const SystemSymbol& sys, const BlockEvaluation& ev);

}  // namespace ghx
