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

#include <functional>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

/// Spectral decomposition of a Hermitian matrix: h = V diag(eigenvalues) V*.
struct HermEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, matching order
};

/// Cyclic Jacobi eigensolver. The input is symmetrized to (h + h*)/2 first.
///
/// Throws NonSquare, or NotHermitian when ||h - h*||_F > 1e-10 max(1, ||h||_F).
HermEig herm_eig(const ComplexMatrix& h);

/// Largest eigenvalue of a Hermitian matrix without eigenvectors
/// (Householder tridiagonalization + Sturm bisection). Same preconditions as herm_eig.
double lambda_max(const ComplexMatrix& h);
/// Same as lambda_max for an input already known to be exactly Hermitian; no
/// validation, and `a` is overwritten by the tridiagonal reduction.
double lambda_max_overwrite(ComplexMatrix& a);

/// Largest singular value, sqrt(lambda_max(m* m)). Any shape.
double operator_norm(const ComplexMatrix& m);

/// Right singular system of a square matrix: m* m = V diag(sigma^2) V*,
/// with sigma_i = ||m v_i|| (ascending with V's columns).
struct SingularSystem {
  std::vector<double> sigma;
  ComplexMatrix right;
};
SingularSystem singular_system(const ComplexMatrix& m);

/// |m| = (m* m)^{1/2}.
ComplexMatrix abs_value(const ComplexMatrix& m);
/// phi(|m|) by functional calculus on the singular system.
ComplexMatrix abs_function(const ComplexMatrix& m, const std::function<double(double)>& phi);
/// |m|^e with the convention t^0 = 1 (so |m|^0 = I).
ComplexMatrix abs_power(const ComplexMatrix& m, double e);

/// phi(p) for Hermitian PSD p. Eigenvalues in [-1e-10 max(1,||p||), 0) are clamped
/// to zero; anything lower raises NegativeSpectrum.
ComplexMatrix matfun_psd(const ComplexMatrix& p, const std::function<double(double)>& phi);

/// m = w p with p = |m| and w unitary (an isometry on range(p), completed on the kernel).
struct Polar {
  ComplexMatrix w;
  ComplexMatrix p;
};
Polar polar_decompose(const ComplexMatrix& m);

/// m = re + i im with re, im Hermitian.
struct Cartesian {
  ComplexMatrix re;
  ComplexMatrix im;
};
Cartesian cartesian(const ComplexMatrix& m);

/// Re(e^{i theta} m) = (e^{i theta} m + e^{-i theta} m*) / 2.
ComplexMatrix real_part_rotated(const ComplexMatrix& m, double theta);

bool is_hermitian(const ComplexMatrix& m, double rel_tol = 1e-10);
bool is_normal(const ComplexMatrix& m, double rel_tol = 1e-9);
/// Hermitian with smallest eigenvalue >= -rel_tol max(1, ||m||).
bool is_psd(const ComplexMatrix& m, double rel_tol = 1e-10);

}  // namespace numrad
