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

#include <cstddef>

#include "numrad/matrix.hpp"

namespace numrad {

/// Four n x n blocks of [[a, b], [c, d]]. Carries T = [[a,0],[0,d]], S = [[0,b],[c,0]]
/// and Y = [[a,b],[c,d]] for the bound evaluators.
class BlockMatrix2x2 {
 public:
  /// Throws DimensionMismatch unless all four blocks are square of one size.
  BlockMatrix2x2(ComplexMatrix a, ComplexMatrix b, ComplexMatrix c, ComplexMatrix d);

  /// Every block set to `m`.
  static BlockMatrix2x2 uniform(const ComplexMatrix& m);
  /// Splits a 2n x 2n matrix into its four n x n blocks.
  static BlockMatrix2x2 split(const ComplexMatrix& m);

  std::size_t block_dim() const noexcept { return a_.rows(); }
  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& b() const noexcept { return b_; }
  const ComplexMatrix& c() const noexcept { return c_; }
  const ComplexMatrix& d() const noexcept { return d_; }

  ComplexMatrix embed() const;          // [[a,b],[c,d]]
  ComplexMatrix diag_part() const;      // [[a,0],[0,d]]
  ComplexMatrix offdiag_part() const;   // [[0,b],[c,0]]

 private:
  ComplexMatrix a_, b_, c_, d_;
};

ComplexMatrix block_embed(const BlockMatrix2x2& blocks);

}  // namespace numrad
