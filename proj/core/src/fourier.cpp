// SPDX-License-Identifier: Apache-2.0
#include "ghx/fourier.hpp"

#include <cmath>
#include <numbers>

namespace ghx {

namespace {

std::size_t pow_size(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

// Decodes row-major point index p into grid coordinates (axis 0 slowest).
void decode(std::size_t p, int r, int N, std::vector<int>& j) {
  for (int a = r - 1; a >= 0; --a) {
    j[a] = static_cast<int>(p % N);
    p /= N;
  }
}

int bin_to_freq(int k, int N) { return k < N / 2 ? k : k - N; }

// e^{2 pi i t / N} table, t = 0..N-1.
std::vector<Complex> twiddle_table(int N) {
  std::vector<Complex> w(N);
  for (int t = 0; t < N; ++t)
    w[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / N);
  return w;
}

Complex unit_phase(const std::vector<Complex>& table, std::int64_t dot, int N) {
  std::int64_t t = dot % N;
  if (t < 0) t += N;
  return table[static_cast<std::size_t>(t)];
}

}  // namespace

std::size_t GridFunction::point_count() const { return pow_size(grid_size, r); }

void GridFunction::validate() const {
  if (r < 1) throw Error("grid function: r must be positive");
  if (grid_size < 2 || grid_size % 2 != 0)
    throw Error("grid function: N must be even and >= 2");
  if (n < 1) throw Error("grid function: n must be positive");
  if (values.size() != point_count())
    throw Error("grid function: expected " + std::to_string(point_count()) +
                " points, got " + std::to_string(values.size()));
  for (const auto& v : values) {
    if (v.size() != n) throw Error("grid function: component count mismatch");
    if (!v.allFinite()) throw Error("grid function: non-finite sample");
  }
}

GridFunction GridFunction::zeros(int r, int grid_size, int n) {
  GridFunction f;
  f.r = r;
  f.grid_size = grid_size;
  f.n = n;
  f.values.assign(pow_size(grid_size, r), Eigen::VectorXcd::Zero(n));
  f.validate();
  return f;
}

CoefficientField forward(const GridFunction& f) {
  f.validate();
  const int N = f.grid_size;
  const int r = f.r;
  const std::size_t points = f.point_count();
  const auto table = twiddle_table(N);
  const double scale = 1.0 / static_cast<double>(points);

  CoefficientField out(GroupId::torus(r), f.n);
  std::vector<int> j(r), k(r);
  std::vector<std::int64_t> freq(r);
  for (std::size_t b = 0; b < points; ++b) {
    decode(b, r, N, k);
    for (int a = 0; a < r; ++a) freq[a] = bin_to_freq(k[a], N);
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(f.n);
    for (std::size_t p = 0; p < points; ++p) {
      decode(p, r, N, j);
      std::int64_t dot = 0;
      for (int a = 0; a < r; ++a) dot += static_cast<std::int64_t>(j[a]) * freq[a];
      acc += std::conj(unit_phase(table, dot, N)) * f.values[p];
    }
    CoefficientField::BlockStack stack;
    stack.reserve(f.n);
    for (int i = 0; i < f.n; ++i) {
      ComplexMatrix block(1, 1);
      block(0, 0) = scale * acc(i);
      stack.push_back(std::move(block));
    }
    out.set(RepIndex::torus(std::vector<std::int64_t>(freq.begin(), freq.end())),
            std::move(stack));
  }
  return out;
}

GridFunction inverse(const CoefficientField& c, int grid_size) {
  if (!c.group().is_torus()) throw Error("inverse: torus coefficient field required");
  const int r = c.group().rank;
  const int N = grid_size;
  if (N < 2 || N % 2 != 0) throw Error("inverse: N must be even and >= 2");
  for (const auto& [xi, stack] : c.entries())
    for (const auto coord : xi.coords())
      if (coord < -N / 2 || coord >= N / 2)
        throw Error("inverse: support exceeds the grid band at xi=" + xi.to_string());

  GridFunction f = GridFunction::zeros(r, N, c.components());
  const auto table = twiddle_table(N);
  const std::size_t points = f.point_count();
  std::vector<int> j(r);
  for (std::size_t p = 0; p < points; ++p) {
    decode(p, r, N, j);
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(c.components());
    for (const auto& [xi, stack] : c.entries()) {
      std::int64_t dot = 0;
      for (int a = 0; a < r; ++a) dot += static_cast<std::int64_t>(j[a]) * xi.coords()[a];
      const Complex phase = unit_phase(table, dot, N);
      for (int i = 0; i < c.components(); ++i) acc(i) += phase * stack[i](0, 0);
    }
    f.values[p] = std::move(acc);
  }
  return f;
}

PlancherelResult plancherel_check(const GridFunction& f) {
  f.validate();
  PlancherelResult res;
  for (const auto& v : f.values) res.lhs += v.squaredNorm();
  res.lhs /= static_cast<double>(f.point_count());

  const auto c = forward(f);
  for (const auto& [xi, stack] : c.entries()) {
    double sq = 0.0;
    for (const auto& b : stack) sq += b.squaredNorm();
    res.rhs += sq;  // d_xi = 1 on the torus
  }
  const double denom = std::max(res.lhs, res.rhs);
  res.rel_error = denom > 0.0 ? std::abs(res.lhs - res.rhs) / denom : 0.0;
  return res;
}

namespace {

Complex poly_eval(const std::vector<TorusPolyTerm>& terms, const RepIndex& xi) {
  Complex value = 0.0;
  for (const auto& t : terms) {
    Complex term = t.coeff;
    for (std::size_t a = 0; a < t.alpha.size(); ++a) {
      const Complex base(0.0, static_cast<double>(xi.coords()[a]));
      for (int p = 0; p < t.alpha[a]; ++p) term *= base;
    }
    value += term;
  }
  return value;
}

}  // namespace

double quantization_check(const SystemSymbol& sys, const GridFunction& f) {
  f.validate();
  if (!sys.group.is_torus() || sys.group.rank != f.r)
    throw Error("quantization_check: system group does not match the grid");
  if (sys.n != f.n)
    throw Error("quantization_check: system expects " + std::to_string(sys.n) +
                " components, function has " + std::to_string(f.n));
  for (const auto& sym : sys.grid)
    if (!sym.poly_terms())
      throw Error("quantization_check: non-polynomial entry '" + sym.name() + "'");

  const auto c = forward(f);

  // Route A: block action in coefficient space, then synthesis.
  CoefficientField applied(sys.group, sys.m);
  for (const auto& [xi, stack] : c.entries())
    applied.set(xi, apply(sys, xi, stack));
  const GridFunction ga = inverse(applied, f.grid_size);

  // Route B: evaluate each entry from its own term list and synthesize with
  // an independent summation loop.
  const int N = f.grid_size;
  const auto table = twiddle_table(N);
  std::vector<std::pair<const RepIndex*, Eigen::VectorXcd>> products;
  products.reserve(c.entries().size());
  for (const auto& [xi, stack] : c.entries()) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(sys.m);
    for (int j = 0; j < sys.m; ++j) {
      Complex acc = 0.0;
      for (int i = 0; i < sys.n; ++i)
        acc += poly_eval(*sys.at(j, i).poly_terms(), xi) * stack[i](0, 0);
      w(j) = acc;
    }
    products.emplace_back(&xi, std::move(w));
  }

  double max_err = 0.0;
  std::vector<int> jj(f.r);
  for (std::size_t p = 0; p < f.point_count(); ++p) {
    decode(p, f.r, N, jj);
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(sys.m);
    for (const auto& [xi, w] : products) {
      std::int64_t dot = 0;
      for (int a = 0; a < f.r; ++a)
        dot += static_cast<std::int64_t>(jj[a]) * xi->coords()[a];
      acc += unit_phase(table, dot, N) * w;
    }
    max_err = std::max(max_err, (acc - ga.values[p]).cwiseAbs().maxCoeff());
  }
  return max_err;
}

}  // namespace ghx
