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

#include "numrad/block.hpp"

#include <string>

#include "numrad/error.hpp"

namespace numrad {
namespace {

ComplexMatrix assemble(const ComplexMatrix* a, const ComplexMatrix* b, const ComplexMatrix* c,
                       const ComplexMatrix* d, std::size_t n) {
  ComplexMatrix out(2 * n, 2 * n);
  auto place = [&](const ComplexMatrix* blk, std::size_t r0, std::size_t c0) {
    if (blk == nullptr) return;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(r0 + i, c0 + j) = (*blk)(i, j);
    }
  };
  place(a, 0, 0);
  place(b, 0, n);
  place(c, n, 0);
  place(d, n, n);
  return out;
}

}  // namespace

BlockMatrix2x2::BlockMatrix2x2(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c, ComplexMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const std::size_t n = a_.rows();
  for (const ComplexMatrix* m : {&a_, &b_, &c_, &d_}) {
    if (m->rows() != n || m->cols() != n) {
      throw Error(Errc::DimensionMismatch,
                  "blocks must all be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                      std::to_string(m->rows()) + "x" + std::to_string(m->cols()));
    }
  }
}

BlockMatrix2x2 BlockMatrix2x2::uniform(const ComplexMatrix& m) { return {m, m, m, m}; }

BlockMatrix2x2 BlockMatrix2x2::split(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(Errc::DimensionMismatch, "split: expects an even square matrix");
  }
  const std::size_t n = m.rows() / 2;
  auto take = [&](std::size_t r0, std::size_t c0) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) = m(r0 + i, c0 + j);
    }
    return out;
  };
  return {take(0, 0), take(0, n), take(n, 0), take(n, n)};
}

ComplexMatrix BlockMatrix2x2::embed() const { return assemble(&a_, &b_, &c_, &d_, block_dim()); }
ComplexMatrix BlockMatrix2x2::diag_part() const {
  return assemble(&a_, nullptr, nullptr, &d_, block_dim());
}
ComplexMatrix BlockMatrix2x2::offdiag_part() const {
  return assemble(nullptr, &b_, &c_, nullptr, block_dim());
}

ComplexMatrix block_embed(const BlockMatrix2x2& blocks) { return blocks.embed(); }

}  // namespace numrad
