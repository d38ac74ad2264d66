// SPDX-License-Identifier: Apache-2.0
#include "ghx/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "ghx/format.hpp"

namespace ghx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int resolve_threads(int threads, std::size_t work) {
  int t = threads;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return static_cast<int>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

}  // namespace

ScanResult scan(const SystemSymbol& sys, double cutoff, int threads) {
  const auto reps = enumerate_reps(sys.group, cutoff);
  ScanResult out;
  out.group = sys.group;
  out.m = sys.m;
  out.n = sys.n;
  out.cutoff = cutoff;
  out.records.resize(reps.size());

  const auto worker = [&](std::size_t lo, std::size_t hi, std::string* error) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        const BlockEvaluation ev = evaluate(sys, reps[i]);
        ScanRecord rec;
        rec.xi = ev.xi;
        rec.bracket = ev.bracket;
        rec.dim = ev.dim;
        rec.lambda_min = ev.lambda_min;
        rec.zero_flag = ev.zero_flag;
        rec.hs = ev.hs;
        rec.op = ev.op;
        rec.square = ev.square;
        rec.det = ev.det;
        rec.bounds = make_bound_report(sys, ev);
        out.records[i] = std::move(rec);
      } catch (const std::exception& e) {
        if (error->empty())
          *error = "scan failed at xi=" + reps[i].to_string() + ": " + e.what();
        return;
      }
    }
  };

  const int t = resolve_threads(threads, reps.size());
  if (t == 1) {
    std::string error;
    worker(0, reps.size(), &error);
    if (!error.empty()) throw Error(error);
    return out;
  }

  std::vector<std::thread> pool;
  std::vector<std::string> errors(t);
  const std::size_t chunk = (reps.size() + t - 1) / t;
  for (int w = 0; w < t; ++w) {
    const std::size_t lo = std::min(reps.size(), w * chunk);
    const std::size_t hi = std::min(reps.size(), lo + chunk);
    pool.emplace_back(worker, lo, hi, &errors[w]);
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  return out;
}

namespace {

struct SeriesPoint {
  const RepIndex* xi = nullptr;
  double bracket = 1.0;
  double value = 0.0;
  bool zero = false;
};

struct Series {
  double cutoff = 1.0;
  std::vector<SeriesPoint> pts;  // bracket ascending (enumeration order)
};

struct TwoScaleTails {
  std::vector<const SeriesPoint*> full_nz, half_nz;
  int full_zero = 0, half_zero = 0;
  long total_zero_full = 0, total_zero_half = 0;
  double lo = 1.0, hi = 1.0;
};

std::size_t tail_begin(std::size_t size, double fraction) {
  const auto count =
      static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(size)));
  return size - std::min(size, std::max<std::size_t>(count, 1));
}

TwoScaleTails split_two_scale(const Series& s, double fraction) {
  TwoScaleTails t;
  const auto& pts = s.pts;
  std::size_t half_size = 0;
  const double half_cut = s.cutoff / 2.0;
  for (const auto& p : pts) {
    if (p.bracket <= half_cut) ++half_size;
    if (p.zero) ++t.total_zero_full;
  }
  for (std::size_t i = 0; i < half_size; ++i)
    if (pts[i].zero) ++t.total_zero_half;

  if (!pts.empty()) {
    const std::size_t fb = tail_begin(pts.size(), fraction);
    t.lo = pts[fb].bracket;
    t.hi = pts.back().bracket;
    for (std::size_t i = fb; i < pts.size(); ++i) {
      if (pts[i].zero)
        ++t.full_zero;
      else
        t.full_nz.push_back(&pts[i]);
    }
  }
  if (half_size > 0) {
    const std::size_t hb = tail_begin(half_size, fraction);
    for (std::size_t i = hb; i < half_size; ++i) {
      if (pts[i].zero)
        ++t.half_zero;
      else
        t.half_nz.push_back(&pts[i]);
    }
  }
  return t;
}

double ols_slope(const std::vector<const SeriesPoint*>& pts) {
  double xm = 0.0, ym = 0.0;
  for (const auto* p : pts) {
    xm += std::log(p->bracket);
    ym += std::log(p->value);
  }
  xm /= pts.size();
  ym /= pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto* p : pts) {
    const double dx = std::log(p->bracket) - xm;
    sxx += dx * dx;
    sxy += dx * (std::log(p->value) - ym);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

double min_log_ratio(const std::vector<const SeriesPoint*>& pts, double k) {
  double best = kInf;
  for (const auto* p : pts)
    best = std::min(best, std::log(p->value) - k * std::log(p->bracket));
  return best;
}

GrowthEstimate fit_series(const Series& s, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error("tail fraction must lie in (0, 1]");
  const auto tails = split_two_scale(s, fraction);
  if (tails.full_nz.size() < 3)
    throw Error("no growth to fit: fewer than 3 nonzero records in the tail");

  GrowthEstimate est;
  est.zero_count = tails.full_zero;
  est.tail_lo = tails.lo;
  est.tail_hi = tails.hi;
  est.ols_slope = ols_slope(tails.full_nz);

  if (tails.half_nz.empty()) {
    est.certified = false;
    est.k_hat = est.ols_slope;
  } else {
    est.certified = true;
    // Accept the largest grid exponent whose tail constant loses less than
    // half a grid step (2^-0.05) over one cutoff doubling.
    const double log_tol = -0.05 * std::log(2.0);
    bool found = false;
    for (int deci = 200; deci >= -200; --deci) {
      const double k = deci / 10.0;
      if (min_log_ratio(tails.full_nz, k) - min_log_ratio(tails.half_nz, k) >= log_tol) {
        est.k_hat = k;
        found = true;
        break;
      }
    }
    if (!found) {
      est.below_floor = true;
      est.k_hat = -kInf;
    }
  }

  const double k_env = est.below_floor ? kGrowthFloor : est.k_hat;
  est.c_hat = std::exp(min_log_ratio(tails.full_nz, k_env));
  for (const auto* p : tails.full_nz)
    if (p->value < est.c_hat * std::pow(p->bracket, k_env) * (1.0 - 1e-15))
      est.violating.push_back(*p->xi);
  return est;
}

Series lambda_series(const ScanResult& scan_result) {
  Series s;
  s.cutoff = scan_result.cutoff;
  s.pts.reserve(scan_result.records.size());
  for (const auto& rec : scan_result.records)
    s.pts.push_back({&rec.xi, rec.bracket, rec.lambda_min, rec.zero_flag});
  return s;
}

struct SeriesClassification {
  Classification verdict = Classification::Inconclusive;
  TwoScaleTails tails;
  std::optional<GrowthEstimate> fit;
  std::vector<std::string> reasons;
};

SeriesClassification classify_series(const Series& s, double fraction) {
  SeriesClassification out;
  out.tails = split_two_scale(s, fraction);
  std::string fit_error;
  try {
    out.fit = fit_series(s, fraction);
  } catch (const Error& e) {
    fit_error = e.what();
  }

  const auto& t = out.tails;
  const bool zeros_recur =
      t.full_zero > 0 && t.half_zero > 0 && t.total_zero_full > t.total_zero_half;
  if (zeros_recur) {
    out.verdict = Classification::Violated;
    out.reasons.push_back(
        "singular directions recur in the tail at both scales and grow with the "
        "cutoff (" +
        std::to_string(t.total_zero_half) + " -> " + std::to_string(t.total_zero_full) +
        " zeros)");
    return out;
  }
  if (out.fit && out.fit->certified && out.fit->below_floor) {
    out.verdict = Classification::Violated;
    out.reasons.push_back(
        "smallest singular values decay faster than every tested power down to "
        "exponent " +
        format_double(kGrowthFloor));
    return out;
  }
  if (out.fit && out.fit->certified && t.full_zero == 0 && t.half_zero == 0) {
    out.verdict = Classification::Consistent;
    out.reasons.push_back("zero-free tail at both scales; certified envelope exponent " +
                          format_double(out.fit->k_hat));
    return out;
  }
  out.verdict = Classification::Inconclusive;
  if (!fit_error.empty()) out.reasons.push_back(fit_error);
  if (t.full_zero > 0 || t.half_zero > 0)
    out.reasons.push_back("zeros reach the tail at one scale only (" +
                          std::to_string(t.half_zero) + " at half scale, " +
                          std::to_string(t.full_zero) + " at full scale)");
  if (out.fit && !out.fit->certified)
    out.reasons.push_back("cutoff too small for a two-scale certification");
  if (out.reasons.empty()) out.reasons.push_back("criteria not decisive at this cutoff");
  return out;
}

}  // namespace

GrowthEstimate fit_growth(const ScanResult& scan_result, double tail_fraction) {
  return fit_series(lambda_series(scan_result), tail_fraction);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Consistent: return "GH_CONSISTENT";
    case Classification::Violated: return "GH_VIOLATED";
    case Classification::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

int exit_code(Classification c) {
  switch (c) {
    case Classification::Consistent: return 0;
    case Classification::Violated: return 2;
    case Classification::Inconclusive: return 3;
  }
  return 3;
}

MainCriterion check_main_criterion(const ScanResult& scan_result, double tail_fraction) {
  const auto cls = classify_series(lambda_series(scan_result), tail_fraction);
  MainCriterion mc;
  mc.verdict = cls.verdict;
  mc.tail_zero_full = cls.tails.full_zero;
  mc.tail_zero_half = cls.tails.half_zero;
  mc.total_zero_full = cls.tails.total_zero_full;
  mc.total_zero_half = cls.tails.total_zero_half;
  mc.fit = cls.fit;
  mc.reasons = cls.reasons;
  return mc;
}

double effective_order(const ScalarSymbol& sym, const GroupId& group, double cutoff,
                       bool* estimated) {
  const auto est = estimate_order(sym, group, cutoff);
  if (est.sample_count == 0) return -kInf;  // vanishes identically on the sample
  if (sym.declared_order()) return *sym.declared_order();
  if (estimated) *estimated = true;
  return est.tau_hat;
}

DetSufficientResult check_det_sufficient(const SystemSymbol& sys,
                                         const ScanResult& scan_result,
                                         double tail_fraction) {
  if (!sys.square()) throw Error("determinant criterion needs a square system");
  DetSufficientResult res;

  Series dets;
  dets.cutoff = scan_result.cutoff;
  for (const auto& rec : scan_result.records)
    dets.pts.push_back({&rec.xi, rec.bracket, std::abs(rec.det), rec.zero_flag});
  const auto tails = split_two_scale(dets, tail_fraction);
  res.det_tail_positive = tails.full_zero == 0 && tails.half_zero == 0;
  if (!res.det_tail_positive)
    res.reasons.push_back("determinant vanishes inside the tail window");

  try {
    res.det_fit = fit_series(dets, tail_fraction);
  } catch (const Error& e) {
    res.reasons.push_back(e.what());
  }

  res.max_entry_order = -kInf;
  for (const auto& sym : sys.grid)
    res.max_entry_order = std::max(
        res.max_entry_order,
        effective_order(sym, sys.group, scan_result.cutoff, &res.orders_estimated));

  const double order_threshold = -0.25 * sys.group.dim();
  const bool order_branch = res.max_entry_order < order_threshold;
  const bool bounded_dim_branch = sys.group.is_torus();  // d_xi = 1 throughout
  res.branch = order_branch ? "order" : bounded_dim_branch ? "bounded_dim" : "neither";
  if (res.branch == "neither")
    res.reasons.push_back("neither branch applies: max entry order " +
                          format_double(res.max_entry_order) + " >= " +
                          format_double(order_threshold) +
                          " and representation dimensions are unbounded");

  res.holds = res.det_tail_positive && res.det_fit.has_value() &&
              (order_branch || bounded_dim_branch);
  return res;
}

DominanceSufficientResult check_block_dominance_sufficient(const SystemSymbol& sys,
                                                           const ScanResult& scan_result,
                                                           double tail_fraction) {
  if (!sys.square()) throw Error("block dominance criterion needs a square system");
  DominanceSufficientResult res;

  const auto& records = scan_result.records;
  const std::size_t fb = tail_begin(records.size(), tail_fraction);
  for (std::size_t i = fb; i < records.size(); ++i) {
    ++res.tail_checked;
    if (records[i].bounds.dominant_max) ++res.tail_dominant;
  }
  res.dominant_all_tail = res.tail_checked > 0 && res.tail_dominant == res.tail_checked;
  if (!res.dominant_all_tail)
    res.reasons.push_back("max-norm block dominance fails on " +
                          std::to_string(res.tail_checked - res.tail_dominant) + " of " +
                          std::to_string(res.tail_checked) + " tail representations");

  bool all_margins = true;
  for (int l = 0; l < sys.m; ++l) {
    DiagonalGrowth dg;
    dg.ell = l;

    Series diag;
    diag.cutoff = scan_result.cutoff;
    std::vector<double> values(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      const ComplexMatrix block = sys.at(l, l)(records[i].xi);
      const double v = smallest_singular_value(block);
      const bool zero = v < kNumericalZeroRel * std::max(1.0, hs_norm(block));
      values[i] = zero ? 0.0 : v;
      diag.pts.push_back({&records[i].xi, records[i].bracket, values[i], zero});
    }
    try {
      const auto fit = fit_series(diag, tail_fraction);
      dg.k_ell = fit.k_hat;
      dg.certified = fit.certified && !fit.below_floor;
    } catch (const Error&) {
      dg.fit_failed = true;
    }

    dg.tau_ell = -kInf;
    for (int i = 0; i < sys.m; ++i) {
      if (i == l) continue;
      dg.tau_ell = std::max(dg.tau_ell,
                            effective_order(sys.at(l, i), sys.group, scan_result.cutoff,
                                            &res.orders_estimated));
      dg.tau_ell = std::max(dg.tau_ell,
                            effective_order(sys.at(i, l), sys.group, scan_result.cutoff,
                                            &res.orders_estimated));
    }
    dg.margin = dg.k_ell - dg.tau_ell;
    if (dg.fit_failed || !dg.certified || !(dg.margin > 0.0)) {
      all_margins = false;
      res.reasons.push_back(
          "diagonal entry " + std::to_string(l) +
          (dg.fit_failed ? ": growth fit failed"
                         : ": k=" + format_double(dg.k_ell) + " does not exceed the "
                           "off-diagonal order " + format_double(dg.tau_ell)));
    }
    res.diagonal.push_back(dg);
  }

  res.holds = res.dominant_all_tail && all_margins;
  return res;
}

ColumnCheckResult check_column_system(const SystemSymbol& sys,
                                      const ScanResult& scan_result,
                                      double tail_fraction) {
  if (sys.n != 1) throw Error("column criterion needs n = 1");
  ColumnCheckResult res;
  res.iff = sys.group.is_torus() || sys.m == 1;

  Series maxes;
  maxes.cutoff = scan_result.cutoff;
  for (const auto& rec : scan_result.records) {
    double best = 0.0;
    double scale = 0.0;
    double sumsq = 0.0;
    for (int j = 0; j < sys.m; ++j) {
      const ComplexMatrix block = sys.at(j, 0)(rec.xi);
      best = std::max(best, smallest_singular_value(block));
      scale = std::max(scale, hs_norm(block));
      sumsq += block.squaredNorm();
    }
    const bool zero = best < kNumericalZeroRel * std::max(1.0, scale);
    maxes.pts.push_back({&rec.xi, rec.bracket, zero ? 0.0 : best, zero});

    if (sys.group.is_torus()) {
      // d_xi = 1: the stacked column has smallest singular value
      // sqrt(Sum_j |P_j(xi)|^2) exactly.
      const double direct = smallest_singular_value(assemble(sys, rec.xi));
      const double rhs = std::sqrt(sumsq);
      const double err = std::abs(direct - rhs) / std::max(1.0, rhs);
      res.max_equality_error = std::max(res.max_equality_error, err);
    }
  }
  if (sys.group.is_torus() && res.max_equality_error > 1e-12) {
    res.iff = false;
    res.reasons.push_back("stacked-column equality violated (relative error " +
                          format_double(res.max_equality_error) + ")");
  }

  const auto cls = classify_series(maxes, tail_fraction);
  res.max_block_fit = cls.fit;
  if (res.iff) {
    res.verdict = cls.verdict;
    res.reasons.insert(res.reasons.end(), cls.reasons.begin(), cls.reasons.end());
  } else if (cls.verdict == Classification::Consistent) {
    res.verdict = Classification::Consistent;
    res.reasons.push_back("max-block lower bound passes; sufficient off the torus");
  } else {
    res.verdict = Classification::Inconclusive;
    res.reasons.push_back("max-block bound is one-sided off the torus");
    res.reasons.insert(res.reasons.end(), cls.reasons.begin(), cls.reasons.end());
  }
  return res;
}

Verdict run_verdict(const SystemSymbol& sys, const ScanResult& scan_result,
                    double tail_fraction) {
  Verdict v;
  v.tail_fraction = tail_fraction;
  v.main = check_main_criterion(scan_result, tail_fraction);
  v.classification = v.main.verdict;
  if (sys.square()) {
    v.det_sufficient = check_det_sufficient(sys, scan_result, tail_fraction);
    v.block_dominance = check_block_dominance_sufficient(sys, scan_result, tail_fraction);
  }
  if (sys.n == 1) v.column = check_column_system(sys, scan_result, tail_fraction);
  return v;
}

}  // namespace ghx
