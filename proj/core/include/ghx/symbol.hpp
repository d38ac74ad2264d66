// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ghx/group.hpp"

namespace ghx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// One monomial c * (i xi_1)^{a_1} ... (i xi_r)^{a_r} of a constant-coefficient
// torus multiplier.
struct TorusPolyTerm {
  std::vector<int> alpha;
  Complex coeff;
};

// A matrix-valued evaluator xi -> d_xi x d_xi block with a declared order.
// Immutable after construction; evaluation is pure and thread-safe.
class ScalarSymbol {
 public:
  using Evaluator = std::function<ComplexMatrix(const RepIndex&)>;

  ScalarSymbol() = default;
  ScalarSymbol(std::string name, std::optional<double> declared_order, Evaluator eval);

  const std::string& name() const { return name_; }
  std::optional<double> declared_order() const { return order_; }
  ComplexMatrix operator()(const RepIndex& xi) const;

  // Non-null for symbols built by torus_poly_symbol; the exact term list is
  // used by the quantization cross-check.
  const std::vector<TorusPolyTerm>* poly_terms() const { return poly_.get(); }

  ScalarSymbol with_declared_order(double order) const;

 private:
  friend ScalarSymbol torus_poly_symbol(int rank, std::vector<TorusPolyTerm> terms);

  std::string name_ = "unset";
  std::optional<double> order_;
  Evaluator eval_;
  std::shared_ptr<const std::vector<TorusPolyTerm>> poly_;
};

// Multiplier Sum_a c_a (i xi)^a on T^rank; declared order max |a|. An empty
// term list yields the zero symbol with order 0.
ScalarSymbol torus_poly_symbol(int rank, std::vector<TorusPolyTerm> terms);

// <xi>^s Identity(d_xi); declared order s.
ScalarSymbol bessel_symbol(const GroupId& group, double s);

// Symbols of a basis of left-invariant vector fields on SU(2): anti-Hermitian
// spin matrices normalized so that the symbol-level bracket relations
// [s_1, s_2] = s_3 hold cyclically. Declared order 1.
ScalarSymbol su2_field_symbol(int axis);

// Lookup symbol backed by an explicit table of blocks. Every entry must be
// square of the correct d_xi; evaluation at a missing index is an error.
ScalarSymbol table_symbol(const GroupId& group, std::string name,
                          std::map<RepIndex, ComplexMatrix, RepIndexLess> entries,
                          std::optional<double> declared_order);

struct SymbolOrderEstimate {
  double tau_hat = 0.0;  // -inf when the symbol vanishes on the whole sample
  double c_hat = 1.0;    // ||sigma(xi)||_op <= c_hat <xi>^tau_hat on the sample
  int sample_count = 0;  // nonzero-norm points entering the fit
};

// Least-squares fit of log ||sigma(xi)||_op against log <xi> over the
// enumeration at `cutoff`; zero-norm points are excluded from the fit and
// c_hat is inflated so the estimate is a true bound on the sample.
SymbolOrderEstimate estimate_order(const ScalarSymbol& symbol, const GroupId& group,
                                   double cutoff);

// Angular momentum matrices at spin l = twice_spin / 2, basis ordered
// m = l, l-1, ..., -l. Exposed for tests and composite SU(2) symbols.
ComplexMatrix su2_jplus(int twice_spin);
ComplexMatrix su2_j(int axis, int twice_spin);

}  // namespace ghx
