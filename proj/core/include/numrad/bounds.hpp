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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/block.hpp"
#include "numrad/gauges.hpp"

namespace numrad {

/// Catalog order is the declaration order.
enum class BoundId {
  NormSandwichLower,
  NormSandwichUpper,
  PowerInequality,
  OffdiagHalfSum,
  KittanehAbs,
  KittanehSqLower,
  KittanehSqUpper,
  CartesianPowerLower,
  CartesianPowerUpper,
  Thm2_5,
  Cor2_6,
  Rem2_7_Lower,
  Rem2_7_PsdRho,
  Cor2_8,
  Thm2_9a,
  Thm2_9b,
  Thm3_1,
  Cor3_2,
  Cor3_2_Single,
  Cor3_3,
  Cor3_4,
  Thm3_5,
  Cor3_6,
  Cor3_6_Single,
  Cor3_6_Power,
  Thm3_8,
  Cor3_9,
  Cor3_10,
  Thm3_13a,
  Thm3_13b,
  Cor3_14,
  Cor3_15,
};

inline constexpr std::size_t kBoundCount = 32;

std::string_view to_string(BoundId id) noexcept;
/// Throws UnknownBound.
BoundId bound_from_string(std::string_view name);
std::span<const BoundId> all_bounds() noexcept;

/// Which blocks an id reads.
enum class OperandShape {
  Single,   // a
  Pair,     // a and b
  Offdiag,  // S = [[0,b],[c,0]]
  Diag,     // T = [[a,0],[0,d]]
  Full,     // Y = [[a,b],[c,d]]
};

std::string_view to_string(OperandShape shape) noexcept;

enum class ParamKind { Gauge, Pair, Quad, Holder, R, Alpha, N };

std::string_view to_string(ParamKind kind) noexcept;

/// Range the exponent r must satisfy for an id.
enum class RConstraint { None, AtLeastOne, AtLeastTwo, HolderScaled /* r min(p,q) >= 2 */ };

RConstraint r_constraint(BoundId id) noexcept;

struct BoundParams {
  std::optional<GaugeH> gauge;
  std::optional<FactorPair> pair;
  std::optional<FactorQuad> quad;
  std::optional<HolderPair> holder;
  std::optional<double> r;
  std::optional<double> alpha;
  std::optional<int> n;
};

struct BoundInfo {
  BoundId id;
  std::string_view anchor;  // the inequality as formula text
  OperandShape shape;
  std::vector<ParamKind> required;
  std::string_view hypotheses;
};

/// Every id exactly once, in catalog order.
const std::vector<BoundInfo>& list_bounds();
const BoundInfo& bound_info(BoundId id);

struct HypothesisReport {
  bool ok = true;
  std::map<std::string, bool> checks;
};

HypothesisReport check_hypotheses(BoundId id, const BlockMatrix2x2& blocks,
                                  const BoundParams& params);

struct BoundReport {
  BoundId id = BoundId::NormSandwichLower;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;  // slack >= -tol_effective
  double tol_effective = 0.0;
  HypothesisReport hypotheses;
  std::map<std::string, double> intermediates;
};

/// Evaluates regardless of hypotheses; violations are flagged in the report.
/// Throws MissingParam when a required parameter is absent.
BoundReport evaluate_bound(BoundId id, const BlockMatrix2x2& blocks, const BoundParams& params,
                           double tol = 1e-9);

struct BoundConfig {
  BoundId id;
  BoundParams params;
};

struct TightnessEntry {
  BoundId id;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
};

/// Ascending by rhs; ties keep catalog order, then input order.
std::vector<TightnessEntry> compare_tightness(std::span<const BoundConfig> configs,
                                              const BlockMatrix2x2& blocks, double tol = 1e-9);

std::string to_json(const BoundReport& report);
std::string to_json(std::span<const BoundReport> reports);
std::string to_json(std::span<const TightnessEntry> ranking);
std::string catalog_json();

}  // namespace numrad
