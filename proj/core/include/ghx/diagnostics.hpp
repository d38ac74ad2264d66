// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ghx/bounds.hpp"

namespace ghx {

struct ScanRecord {
  RepIndex xi;
  double bracket = 1.0;
  std::int64_t dim = 1;
  double lambda_min = 0.0;
  bool zero_flag = false;
  double hs = 0.0;
  double op = 0.0;
  bool square = false;
  Complex det{0.0, 0.0};
  BoundReport bounds;
};

struct ScanResult {
  GroupId group;
  int m = 1, n = 1;
  double cutoff = 1.0;
  std::vector<ScanRecord> records;  // enumeration order
};

// Evaluates the system at every representation up to the cutoff. threads = 0
// picks the hardware concurrency; results are identical for any thread count.
ScanResult scan(const SystemSymbol& sys, double cutoff, int threads = 1);

// Weakest envelope exponent probed by the criteria ("decays faster than every
// tested power" means no exponent at or above this floor survives).
inline constexpr double kGrowthFloor = -20.0;

// The growth condition lambda_min >= C <xi>^k holds asymptotically for some
// k iff the envelope constant does not degrade with the cutoff. k_hat is the
// largest exponent on a 0.1-step grid whose tail constant at the full cutoff
// stays within half a grid step (factor 2^-0.05 per doubling) of the constant
// at half the cutoff. The plain least-squares log-log slope is reported
// alongside; it over-shoots the critical exponent on curved lattice data.
struct GrowthEstimate {
  double k_hat = 0.0;
  double ols_slope = 0.0;
  double c_hat = 0.0;  // min tail ratio lambda_min / <xi>^k_hat
  int zero_count = 0;  // zero records inside the full-scale tail window
  std::vector<RepIndex> violating;  // tail records below the fitted envelope
  double tail_lo = 1.0, tail_hi = 1.0;
  bool certified = false;   // two-scale comparison was available
  bool below_floor = false; // no stable exponent >= kGrowthFloor
};

// Fits the tail (top tail_fraction of records by count). Throws when fewer
// than 3 nonzero records reach the tail.
GrowthEstimate fit_growth(const ScanResult& scan_result, double tail_fraction);

enum class Classification { Consistent, Violated, Inconclusive };
const char* to_string(Classification c);
int exit_code(Classification c);

struct MainCriterion {
  Classification verdict = Classification::Inconclusive;
  int tail_zero_full = 0;
  int tail_zero_half = 0;
  long total_zero_full = 0;
  long total_zero_half = 0;
  std::optional<GrowthEstimate> fit;
  std::vector<std::string> reasons;
};

// Two-scale reading of the characterization: singular directions recurring in
// the tail at both scales (with a growing count) rule the system out; a
// certified envelope with a zero-free tail is consistent with it.
MainCriterion check_main_criterion(const ScanResult& scan_result, double tail_fraction);

struct DetSufficientResult {
  bool holds = false;
  std::string branch;  // "order", "bounded_dim" or "neither"
  bool det_tail_positive = false;
  std::optional<GrowthEstimate> det_fit;
  double max_entry_order = 0.0;
  bool orders_estimated = false;
  std::vector<std::string> reasons;
};

DetSufficientResult check_det_sufficient(const SystemSymbol& sys,
                                         const ScanResult& scan_result,
                                         double tail_fraction);

struct DiagonalGrowth {
  int ell = 0;
  double k_ell = 0.0;
  double tau_ell = 0.0;  // -inf when the off-diagonal entries vanish on the sample
  double margin = 0.0;   // k_ell - tau_ell
  bool certified = false;
  bool fit_failed = false;
};

struct DominanceSufficientResult {
  bool holds = false;
  bool dominant_all_tail = false;
  long tail_checked = 0;
  long tail_dominant = 0;
  std::vector<DiagonalGrowth> diagonal;
  bool orders_estimated = false;
  std::vector<std::string> reasons;
};

DominanceSufficientResult check_block_dominance_sufficient(const SystemSymbol& sys,
                                                           const ScanResult& scan_result,
                                                           double tail_fraction);

struct ColumnCheckResult {
  Classification verdict = Classification::Inconclusive;
  bool iff = false;                 // torus equality route, or m == 1
  double max_equality_error = 0.0;  // torus only
  std::optional<GrowthEstimate> max_block_fit;
  std::vector<std::string> reasons;
};

// n = 1 systems: per-xi max of the blockwise smallest singular values. On the
// torus the stacked value equals sqrt(Sum_j |P_j(xi)|^2) exactly, upgrading
// the one-sided bound to a characterization.
ColumnCheckResult check_column_system(const SystemSymbol& sys,
                                      const ScanResult& scan_result,
                                      double tail_fraction);

struct Verdict {
  Classification classification = Classification::Inconclusive;
  double tail_fraction = 0.5;
  MainCriterion main;
  std::optional<DetSufficientResult> det_sufficient;
  std::optional<DominanceSufficientResult> block_dominance;
  std::optional<ColumnCheckResult> column;
};

Verdict run_verdict(const SystemSymbol& sys, const ScanResult& scan_result,
                    double tail_fraction);

// Declared order when present; otherwise the fitted estimate (sets
// *estimated). Symbols vanishing on the whole sample report -inf.
double effective_order(const ScalarSymbol& sym, const GroupId& group, double cutoff,
                       bool* estimated);

}  // namespace ghx
