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

#include "numrad/matrix.hpp"

#include <cmath>
#include <string>

#include "numrad/error.hpp"

namespace numrad {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Errc::DimensionMismatch, "matrix extents must be positive");
  }
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows_ * cols_) +
                                             " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(Errc::DimensionMismatch, "matrix extents must be positive");
  }
  data_.reserve(rows_ * cols_);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(Errc::DimensionMismatch, "ragged row " + std::to_string(i));
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
  return ComplexMatrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

ComplexMatrix ComplexMatrix::column(std::initializer_list<Complex> entries) {
  return column(std::span<const Complex>(entries.begin(), entries.size()));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(Errc::DimensionMismatch, "operator*: inner extents " + std::to_string(lhs.cols()) +
                                             " vs " + std::to_string(rhs.rows()));
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

ComplexMatrix adjoint_times(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    throw Error(Errc::DimensionMismatch, "adjoint_times: row extents differ");
  }
  ComplexMatrix out(lhs.cols(), rhs.cols());
  for (std::size_t k = 0; k < lhs.rows(); ++k) {
    for (std::size_t i = 0; i < lhs.cols(); ++i) {
      const Complex a = std::conj(lhs(k, i));
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix times_adjoint(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.cols()) {
    throw Error(Errc::DimensionMismatch, "times_adjoint: column extents differ");
  }
  ComplexMatrix out(lhs.rows(), rhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.rows(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < lhs.cols(); ++k) s += lhs(i, k) * std::conj(rhs(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "trace");
  Complex s{};
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& v : m.data()) s = std::max(s, std::abs(v));
  return s;
}

Complex inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw Error(Errc::DimensionMismatch, "inner: expects column vectors of equal length");
  }
  Complex s{};
  for (std::size_t i = 0; i < x.rows(); ++i) s += x(i, 0) * std::conj(y(i, 0));
  return s;
}

double vector_norm(const ComplexMatrix& x) noexcept { return frobenius_norm(x); }

ComplexMatrix power(const ComplexMatrix& m, int n) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "power");
  if (n < 0) throw Error(Errc::OutOfRange, "power: negative exponent");
  ComplexMatrix result = ComplexMatrix::identity(m.rows());
  ComplexMatrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace numrad
