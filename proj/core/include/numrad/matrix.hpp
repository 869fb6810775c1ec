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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are matrices with one column.
class ComplexMatrix {
 public:
  /// Zero matrix; throws DimensionMismatch when either extent is zero.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of `entries` (row-major); their count must be rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  static ComplexMatrix column(std::span<const Complex> entries);
  static ComplexMatrix column(std::initializer_list<Complex> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);
/// adjoint(lhs) * rhs without forming the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
/// lhs * adjoint(rhs).
ComplexMatrix times_adjoint(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m) noexcept;
double max_abs(const ComplexMatrix& m) noexcept;

/// <x, y> = y* x for column vectors (linear in the first slot).
Complex inner(const ComplexMatrix& x, const ComplexMatrix& y);
double vector_norm(const ComplexMatrix& x) noexcept;

/// Matrix power by repeated squaring; n >= 0, square input.
ComplexMatrix power(const ComplexMatrix& m, int n);

}  // namespace numrad
