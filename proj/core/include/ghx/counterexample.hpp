// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ghx/coefficient_field.hpp"

namespace ghx {

struct Violation {
  int ell = 1;
  RepIndex xi;
};

// Greedy first-fit search, in enumeration order, for distinct xi_l with
// lambda_min[sigma_P(xi_l)] < <xi_l>^{-l}, l = 1, 2, ... Stops at the first l
// with no candidate below the cutoff; the list may be empty.
std::vector<Violation> find_violations(const SystemSymbol& sys, double max_cutoff);

// Fourier coefficients of a non-smooth u whose image under the system decays
// faster than every power: at each xi_l the kernel-direction unit vector sits
// in the first column of every u_i(xi_l), all other coefficients vanish.
struct CounterexampleWitness {
  std::vector<Violation> sequence;
  std::vector<Eigen::VectorXcd> vectors;  // stacked unit vectors, one per xi_l
  CoefficientField u_coefficients;
  std::vector<double> image_norms;  // ||sigma_P(xi_l) u(xi_l)||_HS
};

CounterexampleWitness build_witness(const SystemSymbol& sys,
                                    const std::vector<Violation>& violations);

struct WitnessReport {
  bool pass = false;
  std::vector<std::string> failures;
};

// Re-derives every invariant of the witness: distinct indices, unit
// Hilbert-Schmidt norms (which also certifies that the coefficients do not
// decay), image norms strictly below <xi_l>^{-l}, and agreement between the
// recorded and recomputed image norms.
WitnessReport verify_witness(const SystemSymbol& sys, const CounterexampleWitness& w);

}  // namespace ghx
