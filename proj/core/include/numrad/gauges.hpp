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

#include <string>
#include <string_view>
#include <vector>

namespace numrad {

enum class GaugeFamily { Power, ExpM1, Hinge };

/// Convex nondecreasing h on [0, inf). Power: t^r. ExpM1: e^{st} - 1. Hinge: max(0, t - c).
struct GaugeH {
  GaugeFamily family = GaugeFamily::Power;
  double param = 1.0;

  static GaugeH power(double r) { return {GaugeFamily::Power, r}; }
  static GaugeH expm1(double s) { return {GaugeFamily::ExpM1, s}; }
  static GaugeH hinge(double c) { return {GaugeFamily::Hinge, c}; }

  friend bool operator==(const GaugeH&, const GaugeH&) = default;
};

/// f(t) = t^alpha, g(t) = t^(1 - alpha).
struct FactorPair {
  double alpha = 0.5;
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

struct HolderPair {
  double p = 2.0;
  double q = 2.0;
  friend bool operator==(const HolderPair&, const HolderPair&) = default;
};

struct FactorQuad {
  FactorPair pair1;
  FactorPair pair2;
  friend bool operator==(const FactorQuad&, const FactorQuad&) = default;
};

struct GaugeValidity {
  bool valid = true;
  bool nonnegative_at_zero = true;
  bool monotone = true;
  bool convex = true;
  double worst_second_difference = 0.0;
  std::vector<std::string> failures;
};

/// Throws NegativeInput for t < 0.
double gauge_eval(const GaugeH& h, double t);

/// Sampled certificate on 256 points of [0, 10]. Power with r < 1 is always rejected.
GaugeValidity validate_gauge(const GaugeH& h);

struct FactorValues {
  double f = 0.0;
  double g = 0.0;
};

/// Throws NegativeInput for t < 0. Uses 0^0 = 1.
FactorValues factor_eval(const FactorPair& pair, double t);

bool factor_pair_valid(const FactorPair& pair) noexcept;
bool holder_pair_valid(const HolderPair& pair) noexcept;

/// q = p / (p - 1). Throws OutOfRange for p <= 1.
HolderPair holder_conjugate(double p);

/// Literal forms: `power:r=2`, `expm1:s=1`, `hinge:c=0.5`. Throws Parse.
GaugeH parse_gauge(std::string_view text);
/// `alpha=0.25` or a bare number. Throws Parse, InvalidPair outside [0, 1].
FactorPair parse_factor_pair(std::string_view text);
/// `alpha1=0.25,alpha2=0.75`. Throws Parse, InvalidPair.
FactorQuad parse_factor_quad(std::string_view text);
/// `p=2` or a bare number. Throws Parse, OutOfRange.
HolderPair parse_holder(std::string_view text);

std::string to_string(const GaugeH& h);
std::string to_string(const FactorPair& pair);
std::string to_string(const FactorQuad& quad);
std::string to_string(const HolderPair& pair);

}  // namespace numrad
