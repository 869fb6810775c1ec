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

#include "numrad/ensemble.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "numrad/error.hpp"
#include "numrad/linalg.hpp"

namespace numrad {
namespace {

ComplexMatrix gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(n, n);
  for (auto& v : g.data()) v = Complex(normal(rng), normal(rng));
  return g;
}

// Unitary from Gram-Schmidt (twice) on the columns of a Ginibre draw.
ComplexMatrix haar_like_unitary(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix q = gaussian(n, rng);
  for (std::size_t k = 0; k < n; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex c{};
        for (std::size_t i = 0; i < n; ++i) c += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, k) -= c * q(i, j);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= nrm;
  }
  return q;
}

}  // namespace

std::string_view to_string(EnsembleKind kind) noexcept {
  switch (kind) {
    case EnsembleKind::Ginibre: return "ginibre";
    case EnsembleKind::GUE: return "gue";
    case EnsembleKind::Wishart: return "wishart";
    case EnsembleKind::NilpotentSquareZero: return "square_zero";
    case EnsembleKind::Normal: return "normal";
  }
  return "?";
}

EnsembleKind ensemble_from_string(std::string_view name) {
  for (EnsembleKind k : {EnsembleKind::Ginibre, EnsembleKind::GUE, EnsembleKind::Wishart,
                         EnsembleKind::NilpotentSquareZero, EnsembleKind::Normal}) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::Parse, "unknown ensemble '" + std::string(name) +
                               "' (expected ginibre, gue, wishart, square_zero or normal)");
}

ComplexMatrix generate(const EnsembleSpec& spec) {
  if (spec.dim < 1 || spec.dim > 32) {
    throw Error(Errc::DimOutOfRange,
                "ensemble dimension must lie in [1, 32], got " + std::to_string(spec.dim));
  }
  const auto n = static_cast<std::size_t>(spec.dim);
  std::mt19937_64 rng(spec.seed);
  ComplexMatrix m(n, n);
  switch (spec.kind) {
    case EnsembleKind::Ginibre:
      m = gaussian(n, rng);
      break;
    case EnsembleKind::GUE: {
      const ComplexMatrix g = gaussian(n, rng);
      m = g + adjoint(g);
      m *= 0.5;
      break;
    }
    case EnsembleKind::Wishart: {
      const ComplexMatrix g = gaussian(n, rng);
      m = times_adjoint(g, g);
      // Exactly Hermitian so downstream PSD checks see no skew rounding.
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
      }
      break;
    }
    case EnsembleKind::NilpotentSquareZero: {
      // Q [[0, X], [0, 0]] Q* with X of size k x (n - k), k = n / 2.
      const std::size_t k = n / 2;
      const ComplexMatrix q = haar_like_unitary(n, rng);
      std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
      ComplexMatrix core(n, n);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < n; ++j) core(i, j) = Complex(normal(rng), normal(rng));
      }
      m = times_adjoint(q * core, q);
      break;
    }
    case EnsembleKind::Normal: {
      const ComplexMatrix q = haar_like_unitary(n, rng);
      std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
      std::vector<Complex> diag(n);
      for (auto& d : diag) d = Complex(normal(rng), normal(rng));
      m = times_adjoint(q * ComplexMatrix::diagonal(diag), q);
      break;
    }
  }
  if (spec.rescale) {
    const double norm = operator_norm(m);
    if (norm > 0.0) m *= *spec.rescale / norm;
  }
  return m;
}

}  // namespace numrad
