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

#pragma once

// Test-only reference computations built from different code paths than the library's
// production algorithms.

#include <cstdint>
#include <random>

#include "numrad/matrix.hpp"

namespace numrad::testing {

/// w(m) by a dense theta grid (2048 points) with golden-section polishing, using the
/// Jacobi eigensolver rather than the tridiagonal lambda_max path.
double dense_theta_radius(const ComplexMatrix& m);

/// max |<m x, x>| over `samples` random unit vectors; a lower bound on w(m).
double sampled_radius(const ComplexMatrix& m, int samples, std::uint64_t seed);

/// Largest singular value from the Jacobi eigenvalues of m* m.
double jacobi_norm(const ComplexMatrix& m);

ComplexMatrix random_ginibre(std::size_t n, std::mt19937_64& rng, double scale = 1.0);
ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng);
ComplexMatrix random_psd(std::size_t n, std::mt19937_64& rng);
ComplexMatrix random_unit_vector(std::size_t n, std::mt19937_64& rng);

/// Max-abs distance between two equally sized matrices.
double max_diff(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace numrad::testing
