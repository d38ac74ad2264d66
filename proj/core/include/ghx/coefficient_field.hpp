// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "ghx/block_symbol.hpp"

namespace ghx {

// Finitely supported map xi -> n x 1 stack of d_xi x d_xi blocks; holds
// Fourier coefficients of vector-valued functions and counterexample data.
class CoefficientField {
 public:
  using BlockStack = std::vector<ComplexMatrix>;
  using Map = std::map<RepIndex, BlockStack, RepIndexLess>;

  CoefficientField() = default;
  CoefficientField(GroupId group, int n) : group_(group), n_(n) {
    if (n < 1) throw Error("coefficient field needs n >= 1 components");
  }

  const GroupId& group() const { return group_; }
  int components() const { return n_; }

  void set(const RepIndex& xi, BlockStack blocks);
  const BlockStack* find(const RepIndex& xi) const;
  const Map& entries() const { return map_; }
  bool empty() const { return map_.empty(); }

  // Stacked Hilbert-Schmidt norm at xi; zero when unsupported there.
  double hs_norm_at(const RepIndex& xi) const;

 private:
  GroupId group_;
  int n_ = 1;
  Map map_;
};

// (Sum_xi d_xi <xi>^{2s} Sum_i ||u_i(xi)||_HS^2)^{1/2} over the support.
double sobolev_norm(const CoefficientField& c, double s);

struct DecayReport {
  bool zero_field = false;
  double fitted_exponent = 0.0;  // log-log slope of ||u(xi)||_HS against <xi>
  bool rapid_decay = false;      // slope below every -N for N <= 10
  int sample_count = 0;
};

// Classifies coefficient decay over the support restricted to <xi> <= cutoff:
// rapid decay is smoothness evidence, polynomial growth pins a distribution
// order.
DecayReport decay_classify(const CoefficientField& c, double cutoff);

}  // namespace ghx
