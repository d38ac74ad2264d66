// SPDX-License-Identifier: Apache-2.0
#include "ghx/counterexample.hpp"

#include <cmath>
#include <set>

#include <Eigen/SVD>

#include "ghx/format.hpp"

namespace ghx {

std::vector<Violation> find_violations(const SystemSymbol& sys, double max_cutoff) {
  const auto reps = enumerate_reps(sys.group, max_cutoff);
  std::vector<double> lambda(reps.size());
  std::vector<double> brackets(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto meta = rep_meta(sys.group, reps[i]);
    brackets[i] = meta.bracket;
    lambda[i] = smallest_singular_value(assemble(sys, reps[i]));
  }

  std::vector<Violation> out;
  std::vector<bool> used(reps.size(), false);
  for (int ell = 1;; ++ell) {
    bool found = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (used[i]) continue;
      const double threshold = std::pow(brackets[i], -static_cast<double>(ell));
      if (lambda[i] < threshold) {
        used[i] = true;
        out.push_back({ell, reps[i]});
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return out;
}

CounterexampleWitness build_witness(const SystemSymbol& sys,
                                    const std::vector<Violation>& violations) {
  if (violations.empty()) throw Error("build_witness: empty violation sequence");
  CounterexampleWitness w;
  w.sequence = violations;
  w.u_coefficients = CoefficientField(sys.group, sys.n);

  for (const auto& viol : violations) {
    const auto meta = rep_meta(sys.group, viol.xi);
    const auto d = meta.dim;
    const ComplexMatrix A = assemble(sys, viol.xi);

    Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullV);
    Eigen::VectorXcd v = svd.matrixV().col(svd.matrixV().cols() - 1);

    // Phase convention: first non-negligible component real positive.
    const double vmax = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double mag = std::abs(v(i));
      if (mag > 1e-14 * vmax) {
        v *= std::conj(v(i)) / mag;
        break;
      }
    }
    v /= v.norm();

    CoefficientField::BlockStack stack;
    stack.reserve(sys.n);
    for (int i = 0; i < sys.n; ++i) {
      ComplexMatrix block = ComplexMatrix::Zero(d, d);
      block.col(0) = v.segment(static_cast<Eigen::Index>(i) * d, d);
      stack.push_back(std::move(block));
    }
    w.u_coefficients.set(viol.xi, std::move(stack));
    w.image_norms.push_back((A * v).norm());
    w.vectors.push_back(std::move(v));
  }
  return w;
}

WitnessReport verify_witness(const SystemSymbol& sys, const CounterexampleWitness& w) {
  WitnessReport report;
  const auto count = w.sequence.size();
  if (w.vectors.size() != count || w.image_norms.size() != count) {
    report.failures.push_back("inconsistent witness field lengths");
    return report;
  }

  std::set<RepIndex, RepIndexLess> seen;
  for (const auto& viol : w.sequence)
    if (!seen.insert(viol.xi).second)
      report.failures.push_back("repeated representation xi=" + viol.xi.to_string());

  for (std::size_t i = 0; i < count; ++i) {
    const auto& viol = w.sequence[i];
    const auto meta = rep_meta(sys.group, viol.xi);
    const auto* stack = w.u_coefficients.find(viol.xi);
    if (!stack) {
      report.failures.push_back("missing coefficients at xi=" + viol.xi.to_string());
      continue;
    }

    const double hs = w.u_coefficients.hs_norm_at(viol.xi);
    if (std::abs(hs - 1.0) > 1e-12)
      report.failures.push_back("unit norm violated at xi=" + viol.xi.to_string() +
                                ": ||u|| = " + format_double(hs));

    // Stack the coefficient blocks and push them through the system.
    const auto d = meta.dim;
    ComplexMatrix stacked(static_cast<Eigen::Index>(sys.n) * d, d);
    for (int b = 0; b < sys.n; ++b)
      stacked.block(static_cast<Eigen::Index>(b) * d, 0, d, d) = (*stack)[b];
    const double image = (assemble(sys, viol.xi) * stacked).norm();

    const double threshold = std::pow(meta.bracket, -static_cast<double>(viol.ell));
    if (!(image < threshold))
      report.failures.push_back("decay violated at xi=" + viol.xi.to_string() +
                                ": image norm " + format_double(image) + " >= " +
                                format_double(threshold));
    if (!(w.image_norms[i] < threshold))
      report.failures.push_back("decay violated at xi=" + viol.xi.to_string() +
                                ": recorded image norm " +
                                format_double(w.image_norms[i]) + " >= " +
                                format_double(threshold));
    if (std::abs(image - w.image_norms[i]) > 1e-10 * std::max(1.0, image))
      report.failures.push_back("image norm mismatch at xi=" + viol.xi.to_string());
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace ghx
