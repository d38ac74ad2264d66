// SPDX-License-Identifier: Apache-2.0
#include "ghx/coefficient_field.hpp"

#include <cmath>
#include <limits>

namespace ghx {

void CoefficientField::set(const RepIndex& xi, BlockStack blocks) {
  const auto meta = rep_meta(group_, xi);
  if (blocks.size() != static_cast<std::size_t>(n_))
    throw Error("coefficient stack at xi=" + xi.to_string() + " has " +
                std::to_string(blocks.size()) + " blocks, expected " + std::to_string(n_));
  for (const auto& b : blocks) {
    if (b.rows() != meta.dim || b.cols() != meta.dim)
      throw Error("coefficient block shape mismatch at xi=" + xi.to_string());
    if (!b.allFinite())
      throw Error("non-finite coefficient at xi=" + xi.to_string());
  }
  map_[xi] = std::move(blocks);
}

const CoefficientField::BlockStack* CoefficientField::find(const RepIndex& xi) const {
  const auto it = map_.find(xi);
  return it == map_.end() ? nullptr : &it->second;
}

double CoefficientField::hs_norm_at(const RepIndex& xi) const {
  const auto* stack = find(xi);
  if (!stack) return 0.0;
  double sq = 0.0;
  for (const auto& b : *stack) sq += b.squaredNorm();
  return std::sqrt(sq);
}

double sobolev_norm(const CoefficientField& c, double s) {
  double sum = 0.0;
  for (const auto& [xi, stack] : c.entries()) {
    const auto meta = rep_meta(c.group(), xi);
    double sq = 0.0;
    for (const auto& b : stack) sq += b.squaredNorm();
    sum += static_cast<double>(meta.dim) * std::pow(meta.bracket, 2.0 * s) * sq;
  }
  return std::sqrt(sum);
}

DecayReport decay_classify(const CoefficientField& c, double cutoff) {
  DecayReport rep;
  std::vector<std::pair<double, double>> pts;  // (log <xi>, log ||u(xi)||)
  for (const auto& [xi, stack] : c.entries()) {
    const auto meta = rep_meta(c.group(), xi);
    if (meta.bracket > cutoff) continue;
    const double norm = c.hs_norm_at(xi);
    if (norm > 0.0) pts.emplace_back(std::log(meta.bracket), std::log(norm));
  }
  rep.sample_count = static_cast<int>(pts.size());
  if (pts.empty()) {
    rep.zero_field = true;
    return rep;
  }
  if (pts.size() == 1) {
    rep.fitted_exponent = 0.0;
    return rep;
  }
  double xm = 0.0, ym = 0.0;
  for (const auto& [x, y] : pts) {
    xm += x;
    ym += y;
  }
  xm /= pts.size();
  ym /= pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - xm) * (x - xm);
    sxy += (x - xm) * (y - ym);
  }
  rep.fitted_exponent = sxx > 0.0 ? sxy / sxx : 0.0;
  rep.rapid_decay = rep.fitted_exponent < -10.0;
  return rep;
}

}  // namespace ghx
