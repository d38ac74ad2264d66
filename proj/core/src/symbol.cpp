// SPDX-License-Identifier: Apache-2.0
#include "ghx/symbol.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/SVD>

namespace ghx {

ScalarSymbol::ScalarSymbol(std::string name, std::optional<double> declared_order,
                           Evaluator eval)
    : name_(std::move(name)), order_(declared_order), eval_(std::move(eval)) {
  if (!eval_) throw Error("symbol '" + name_ + "' has no evaluator");
}

ComplexMatrix ScalarSymbol::operator()(const RepIndex& xi) const {
  if (!eval_) throw Error("evaluating default-constructed symbol");
  return eval_(xi);
}

ScalarSymbol ScalarSymbol::with_declared_order(double order) const {
  ScalarSymbol out = *this;
  out.order_ = order;
  return out;
}

ScalarSymbol torus_poly_symbol(int rank, std::vector<TorusPolyTerm> terms) {
  if (rank < 1) throw Error("torus_poly_symbol: rank must be positive");
  int max_abs = 0;
  for (const auto& t : terms) {
    if (static_cast<int>(t.alpha.size()) != rank)
      throw Error("torus_poly_symbol: multi-index length " +
                  std::to_string(t.alpha.size()) + " does not match rank " +
                  std::to_string(rank));
    int total = 0;
    for (const int a : t.alpha) {
      if (a < 0) throw Error("torus_poly_symbol: negative exponent");
      total += a;
    }
    max_abs = std::max(max_abs, total);
  }
  auto shared = std::make_shared<const std::vector<TorusPolyTerm>>(std::move(terms));
  auto eval = [shared, rank](const RepIndex& xi) -> ComplexMatrix {
    if (!xi.is_torus() || static_cast<int>(xi.coords().size()) != rank)
      throw Error("torus polynomial evaluated at non-torus index");
    Complex value = 0.0;
    for (const auto& t : *shared) {
      Complex term = t.coeff;
      for (int a = 0; a < rank; ++a) {
        const Complex base(0.0, static_cast<double>(xi.coords()[a]));
        for (int p = 0; p < t.alpha[a]; ++p) term *= base;
      }
      value += term;
    }
    ComplexMatrix out(1, 1);
    out(0, 0) = value;
    return out;
  };
  ScalarSymbol sym(shared->empty() ? "zero" : "torus_poly",
                   static_cast<double>(max_abs), std::move(eval));
  sym.poly_ = shared;
  return sym;
}

ScalarSymbol bessel_symbol(const GroupId& group, double s) {
  auto eval = [group, s](const RepIndex& xi) -> ComplexMatrix {
    const auto meta = rep_meta(group, xi);
    return std::pow(meta.bracket, s) *
           ComplexMatrix::Identity(meta.dim, meta.dim);
  };
  return ScalarSymbol("bessel(" + std::to_string(s) + ")", s, std::move(eval));
}

ComplexMatrix su2_jplus(int twice_spin) {
  if (twice_spin < 0) throw Error("su2_jplus: negative twice-spin");
  const int d = twice_spin + 1;
  const double l = 0.5 * twice_spin;
  ComplexMatrix J = ComplexMatrix::Zero(d, d);
  // basis position a holds m = l - a; (J+)_{m+1,m} sits at (a-1, a)
  for (int a = 1; a < d; ++a) {
    const double m = l - a;
    J(a - 1, a) = std::sqrt((l - m) * (l + m + 1.0));
  }
  return J;
}

ComplexMatrix su2_j(int axis, int twice_spin) {
  const int d = twice_spin + 1;
  const double l = 0.5 * twice_spin;
  if (axis == 3) {
    ComplexMatrix J = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < d; ++a) J(a, a) = l - a;
    return J;
  }
  const ComplexMatrix Jp = su2_jplus(twice_spin);
  const ComplexMatrix Jm = Jp.adjoint();
  if (axis == 1) return 0.5 * (Jp + Jm);
  if (axis == 2) return (Jp - Jm) / Complex(0.0, 2.0);
  throw Error("su2_j: axis must be 1, 2 or 3");
}

ScalarSymbol su2_field_symbol(int axis) {
  if (axis < 1 || axis > 3) throw Error("su2_field_symbol: axis must be 1, 2 or 3");
  auto eval = [axis](const RepIndex& xi) -> ComplexMatrix {
    if (xi.is_torus()) throw Error("su2 field symbol evaluated at torus index");
    const int t = xi.twice_spin();
    // Axes 1 and 3 carry i J_a; axis 2 carries (J_- - J_+)/2 = -i J_2 so that
    // [s_1, s_2] = s_3 holds cyclically.
    if (axis == 2) {
      const ComplexMatrix Jp = su2_jplus(t);
      return 0.5 * (ComplexMatrix(Jp.adjoint()) - Jp);
    }
    return Complex(0.0, 1.0) * su2_j(axis, t);
  };
  return ScalarSymbol("su2_field_" + std::to_string(axis), 1.0, std::move(eval));
}

ScalarSymbol table_symbol(const GroupId& group, std::string name,
                          std::map<RepIndex, ComplexMatrix, RepIndexLess> entries,
                          std::optional<double> declared_order) {
  for (const auto& [xi, block] : entries) {
    const auto meta = rep_meta(group, xi);
    if (block.rows() != meta.dim || block.cols() != meta.dim)
      throw Error("table symbol '" + name + "': wrong block size at xi=" +
                  xi.to_string() + " (expected " + std::to_string(meta.dim) + "x" +
                  std::to_string(meta.dim) + ")");
    if (!block.allFinite())
      throw Error("table symbol '" + name + "': non-finite entry at xi=" + xi.to_string());
  }
  auto shared = std::make_shared<const std::map<RepIndex, ComplexMatrix, RepIndexLess>>(
      std::move(entries));
  std::string held = name;
  auto eval = [shared, held](const RepIndex& xi) -> ComplexMatrix {
    const auto it = shared->find(xi);
    if (it == shared->end())
      throw Error("table symbol '" + held + "': missing representation xi=" +
                  xi.to_string());
    return it->second;
  };
  return ScalarSymbol(std::move(name), declared_order, std::move(eval));
}

SymbolOrderEstimate estimate_order(const ScalarSymbol& symbol, const GroupId& group,
                                   double cutoff) {
  const auto reps = enumerate_reps(group, cutoff);
  std::vector<std::pair<double, double>> pts;  // (log <xi>, log ||sigma||_op)
  double max_ratio_log = -std::numeric_limits<double>::infinity();
  for (const auto& xi : reps) {
    const ComplexMatrix value = symbol(xi);
    const double norm = value.rows() == 0
                            ? 0.0
                            : Eigen::JacobiSVD<ComplexMatrix>(value).singularValues()(0);
    if (norm > 0.0) pts.emplace_back(std::log(rep_meta(group, xi).bracket), std::log(norm));
  }

  SymbolOrderEstimate est;
  est.sample_count = static_cast<int>(pts.size());
  if (pts.empty()) {
    est.tau_hat = -std::numeric_limits<double>::infinity();
    est.c_hat = 1.0;
    return est;
  }
  if (pts.size() == 1) {
    est.tau_hat = 0.0;
  } else {
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
    est.tau_hat = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  for (const auto& [x, y] : pts)
    max_ratio_log = std::max(max_ratio_log, y - est.tau_hat * x);
  est.c_hat = std::exp(max_ratio_log);
  return est;
}

}  // namespace ghx
