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

#include <cstdint>
#include <optional>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad {

enum class EnsembleKind { Ginibre, GUE, Wishart, NilpotentSquareZero, Normal };

std::string_view to_string(EnsembleKind kind) noexcept;
/// Accepts ginibre, gue, wishart, square_zero, normal. Throws Parse.
EnsembleKind ensemble_from_string(std::string_view name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::Ginibre;
  int dim = 2;
  std::uint64_t seed = 0;
  /// Target operator norm; nullopt keeps the raw draw.
  std::optional<double> rescale = 5.0;
};

/// Pure function of the spec. Throws DimOutOfRange outside [1, 32].
ComplexMatrix generate(const EnsembleSpec& spec);

}  // namespace numrad
