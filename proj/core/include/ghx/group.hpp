// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghx/error.hpp"

namespace ghx {

enum class GroupKind { Torus, Su2 };

// One of the supported compact groups: T^r or SU(2).
struct GroupId {
  GroupKind kind = GroupKind::Torus;
  int rank = 1;  // torus rank r; unused for SU(2)

  static GroupId torus(int r);
  static GroupId su2();

  int dim() const { return kind == GroupKind::Torus ? rank : 3; }
  bool is_torus() const { return kind == GroupKind::Torus; }

  std::string to_string() const;  // "torus:r" or "su2"
  static GroupId parse(const std::string& text);

  friend bool operator==(const GroupId& a, const GroupId& b) {
    return a.kind == b.kind && (a.kind == GroupKind::Su2 || a.rank == b.rank);
  }
};

// A point of the unitary dual: a lattice point xi in Z^r for the torus, or a
// spin l in {0, 1/2, 1, ...} for SU(2). Spins are stored exactly as the
// integer 2l so that indices never touch floating point.
class RepIndex {
 public:
  RepIndex() = default;
  static RepIndex torus(std::vector<std::int64_t> coords);
  static RepIndex su2(int twice_spin);

  bool is_torus() const { return torus_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  int twice_spin() const { return twice_spin_; }
  double spin() const { return 0.5 * twice_spin_; }

  std::string to_string() const;  // "3,4" | "l=2" | "l=3/2"
  static RepIndex parse(const std::string& text, const GroupId& group);

  friend bool operator==(const RepIndex& a, const RepIndex& b) {
    return a.torus_ == b.torus_ && a.coords_ == b.coords_ &&
           a.twice_spin_ == b.twice_spin_;
  }
  friend bool operator!=(const RepIndex& a, const RepIndex& b) {
    return !(a == b);
  }

 private:
  bool torus_ = true;
  std::vector<std::int64_t> coords_;
  int twice_spin_ = 0;
};

// Structural strict weak order (lexicographic on coordinates / by 2l).
// Used for coefficient maps and for deterministic tie-breaking.
struct RepIndexLess {
  bool operator()(const RepIndex& a, const RepIndex& b) const;
};

struct RepMeta {
  std::int64_t dim = 1;  // d_xi
  double casimir = 0.0;  // Laplace-Beltrami eigenvalue nu_xi
  double bracket = 1.0;  // <xi> = (1 + nu_xi)^{1/2}
};

RepMeta rep_meta(const GroupId& group, const RepIndex& xi);

// All indices with <xi> <= cutoff (inclusive), sorted by <xi> ascending with
// lexicographic tie-breaking. Deterministic.
std::vector<RepIndex> enumerate_reps(const GroupId& group, double cutoff);

// Smallest C with d_xi <= C <xi>^{dim(G)/2} over the enumeration, i.e. the
// max of d_xi / <xi>^{dim(G)/2}. Always <= 1 on the torus.
double weyl_constant_check(const GroupId& group, double cutoff);

}  // namespace ghx
