// SPDX-License-Identifier: Apache-2.0
#include "ghx/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ghx {

GroupId GroupId::torus(int r) {
  if (r < 1) throw Error("torus rank must be positive, got " + std::to_string(r));
  return GroupId{GroupKind::Torus, r};
}

GroupId GroupId::su2() { return GroupId{GroupKind::Su2, 0}; }

std::string GroupId::to_string() const {
  if (kind == GroupKind::Su2) return "su2";
  return "torus:" + std::to_string(rank);
}

GroupId GroupId::parse(const std::string& text) {
  if (text == "su2") return su2();
  const std::string prefix = "torus:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string tail = text.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad torus rank in group spec '" + text + "'");
    return torus(std::atoi(tail.c_str()));
  }
  throw Error("unknown group '" + text + "' (expected \"torus:r\" or \"su2\")");
}

RepIndex RepIndex::torus(std::vector<std::int64_t> coords) {
  if (coords.empty()) throw Error("torus index needs at least one coordinate");
  RepIndex xi;
  xi.torus_ = true;
  xi.coords_ = std::move(coords);
  return xi;
}

RepIndex RepIndex::su2(int twice_spin) {
  if (twice_spin < 0)
    throw Error("twice-spin must be non-negative, got " + std::to_string(twice_spin));
  RepIndex xi;
  xi.torus_ = false;
  xi.twice_spin_ = twice_spin;
  return xi;
}

std::string RepIndex::to_string() const {
  if (!torus_) {
    if (twice_spin_ % 2 == 0) return "l=" + std::to_string(twice_spin_ / 2);
    return "l=" + std::to_string(twice_spin_) + "/2";
  }
  std::string out;
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(coords_[a]);
  }
  return out;
}

RepIndex RepIndex::parse(const std::string& text, const GroupId& group) {
  if (group.kind == GroupKind::Su2) {
    if (text.rfind("l=", 0) != 0) throw Error("bad SU(2) index '" + text + "'");
    std::string body = text.substr(2);
    int twice = 0;
    const auto slash = body.find('/');
    try {
      if (slash == std::string::npos) {
        twice = 2 * std::stoi(body);
      } else {
        if (body.substr(slash + 1) != "2") throw Error("");
        twice = std::stoi(body.substr(0, slash));
      }
    } catch (const std::exception&) {
      throw Error("bad SU(2) index '" + text + "'");
    }
    return su2(twice);
  }
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw Error("");
    } catch (const std::exception&) {
      throw Error("bad torus index '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != group.rank)
    throw Error("torus index '" + text + "' has " + std::to_string(coords.size()) +
                " coordinates, group expects " + std::to_string(group.rank));
  return torus(std::move(coords));
}

bool RepIndexLess::operator()(const RepIndex& a, const RepIndex& b) const {
  if (a.is_torus() != b.is_torus()) return b.is_torus();
  if (!a.is_torus()) return a.twice_spin() < b.twice_spin();
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                      b.coords().begin(), b.coords().end());
}

RepMeta rep_meta(const GroupId& group, const RepIndex& xi) {
  RepMeta meta;
  if (group.kind == GroupKind::Torus) {
    if (!xi.is_torus() || static_cast<int>(xi.coords().size()) != group.rank)
      throw Error("representation index does not match group " + group.to_string());
    double n2 = 0.0;
    for (const auto c : xi.coords()) n2 += static_cast<double>(c) * static_cast<double>(c);
    meta.dim = 1;
    meta.casimir = n2;
  } else {
    if (xi.is_torus())
      throw Error("representation index does not match group su2");
    const double l = xi.spin();
    meta.dim = xi.twice_spin() + 1;
    meta.casimir = l * (l + 1.0);
  }
  meta.bracket = std::sqrt(1.0 + meta.casimir);
  return meta;
}

namespace {

void check_cutoff(double cutoff) {
  if (!std::isfinite(cutoff)) throw Error("cutoff must be finite");
  if (cutoff < 1.0) throw Error("cutoff must be >= 1");
}

}  // namespace

std::vector<RepIndex> enumerate_reps(const GroupId& group, double cutoff) {
  check_cutoff(cutoff);
  const double q = cutoff * cutoff - 1.0;  // include xi iff nu_xi <= q
  std::vector<RepIndex> out;

  if (group.kind == GroupKind::Su2) {
    for (int t = 0;; ++t) {
      const double nu = 0.25 * static_cast<double>(t) * static_cast<double>(t + 2);
      if (nu > q) break;
      out.push_back(RepIndex::su2(t));
    }
    return out;  // <xi> is strictly increasing in t, no ties
  }

  const int r = group.rank;
  auto bound = static_cast<std::int64_t>(std::floor(std::sqrt(std::max(0.0, q))));
  while (static_cast<double>((bound + 1) * (bound + 1)) <= q) ++bound;
  while (bound > 0 && static_cast<double>(bound * bound) > q) --bound;

  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> pts;  // (|xi|^2, xi)
  std::vector<std::int64_t> cur(r, -bound);
  while (true) {
    std::int64_t n2 = 0;
    for (const auto c : cur) n2 += c * c;
    if (static_cast<double>(n2) <= q) pts.emplace_back(n2, cur);
    int axis = r - 1;
    while (axis >= 0) {
      if (++cur[axis] <= bound) break;
      cur[axis] = -bound;
      --axis;
    }
    if (axis < 0) break;
  }
  std::sort(pts.begin(), pts.end());
  out.reserve(pts.size());
  for (auto& p : pts) out.push_back(RepIndex::torus(std::move(p.second)));
  return out;
}

double weyl_constant_check(const GroupId& group, double cutoff) {
  const auto reps = enumerate_reps(group, cutoff);
  const double expo = 0.5 * group.dim();
  double best = 0.0;
  for (const auto& xi : reps) {
    const auto meta = rep_meta(group, xi);
    best = std::max(best, static_cast<double>(meta.dim) / std::pow(meta.bracket, expo));
  }
  return best;
}

}  // namespace ghx
