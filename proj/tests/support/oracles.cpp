// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrad/linalg.hpp"

namespace numrad::testing {
namespace {

double top_eigenvalue(const ComplexMatrix& m, double theta) {
  return herm_eig(real_part_rotated(m, theta)).eigenvalues.back();
}

}  // namespace

double dense_theta_radius(const ComplexMatrix& m) {
  constexpr int kGrid = 2048;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double best = -1.0;
  int best_k = 0;
  for (int k = 0; k < kGrid; ++k) {
    const double v = top_eigenvalue(m, k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  // Golden section on the bracket around the best grid point.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best_k - 1) * step;
  double hi = (best_k + 1) * step;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = top_eigenvalue(m, x1);
  double f2 = top_eigenvalue(m, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = top_eigenvalue(m, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = top_eigenvalue(m, x1);
    }
  }
  return std::max({best, f1, f2});
}

double sampled_radius(const ComplexMatrix& m, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix x = random_unit_vector(m.rows(), rng);
    best = std::max(best, std::abs(inner(m * x, x)));
  }
  return best;
}

double jacobi_norm(const ComplexMatrix& m) {
  const auto eig = herm_eig(adjoint_times(m, m));
  return std::sqrt(std::max(0.0, eig.eigenvalues.back()));
}

ComplexMatrix random_ginibre(std::size_t n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  ComplexMatrix g(n, n);
  for (auto& v : g.data()) v = Complex(normal(rng), normal(rng));
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(n, rng);
  ComplexMatrix h = g + adjoint(g);
  h *= 0.5;
  return h;
}

ComplexMatrix random_psd(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(n, rng);
  ComplexMatrix p = times_adjoint(g, g);
  for (std::size_t i = 0; i < n; ++i) {
    p(i, i) = p(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) p(j, i) = std::conj(p(i, j));
  }
  return p;
}

ComplexMatrix random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix x(n, 1);
  for (auto& v : x.data()) v = Complex(normal(rng), normal(rng));
  x *= 1.0 / vector_norm(x);
  return x;
}

double max_diff(const ComplexMatrix& x, const ComplexMatrix& y) { return max_abs(x - y); }

}  // namespace numrad::testing
