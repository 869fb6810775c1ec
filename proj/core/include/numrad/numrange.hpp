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
#include <functional>
#include <string_view>

#include "numrad/block.hpp"
#include "numrad/gauges.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

enum class RadiusMethod { ThetaSweep, Ellipse2x2, RayleighAscent };

std::string_view to_string(RadiusMethod method) noexcept;

struct RadiusResult {
  double value = 0.0;
  /// value - tol <= w <= value + tol. Infinite for RayleighAscent.
  double certified_tolerance = 0.0;
  double argmax_theta = 0.0;  // in [0, 2 pi)
  RadiusMethod method = RadiusMethod::ThetaSweep;
};

/// Certified w(m) = max_theta lambda_max(Re(e^{i theta} m)) by branch and bound on theta.
/// `value` is a lower bound attained at argmax_theta; the reported tolerance also covers
/// the eigensolver rounding. Throws NonSquare, OutOfRange for tol < 1e-12.
RadiusResult numerical_radius(const ComplexMatrix& m, double tol = 1e-9);

/// Independent 2x2 oracle from the elliptical numerical range. Throws WrongDimension.
RadiusResult nr_ellipse_2x2(const ComplexMatrix& m);

/// Multi-start monotone ascent of |<m x, x>| on the unit sphere. Always a lower bound.
RadiusResult nr_rayleigh(const ComplexMatrix& m, int restarts, std::uint64_t seed);

/// lambda_max((e^{i theta} m + e^{-i theta} m*) / 2).
double re_norm_at_theta(const ComplexMatrix& m, double theta);

/// rho(bc) for PSD b and c, computed as lambda_max(b^{1/2} c b^{1/2}).
/// Throws NotPSD, DimensionMismatch.
double spectral_radius_psd_product(const ComplexMatrix& b, const ComplexMatrix& c);

struct BlockIdentityReport {
  bool diag_ok = false;  // w([[a,0],[0,d]]) = max(w(a), w(d))
  bool sum_ok = false;   // w([[a,b],[b,a]]) = max(w(a+b), w(a-b))
  bool rot_ok = false;   // w([[a,b],[-b,a]]) = max(w(a+ib), w(a-ib))
  double diag_residual = 0.0;
  double sum_residual = 0.0;
  double rot_residual = 0.0;
};

BlockIdentityReport check_block_identities(const BlockMatrix2x2& blocks, double tol);

struct ScalarCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// phi(<h x, x>) <= <phi(h) x, x> for PSD h, unit x. Throws NotUnit, NotPSD.
ScalarCheck check_jensen(const ComplexMatrix& h, const ComplexMatrix& x,
                         const std::function<double(double)>& phi);

/// |<m x, y>| <= <f^2(|m|) x, x>^{1/2} <g^2(|m*|) y, y>^{1/2}. Throws NotUnit, InvalidPair.
ScalarCheck check_mixed_cs(const ComplexMatrix& m, const ComplexMatrix& x, const ComplexMatrix& y,
                           const FactorPair& pair);

}  // namespace numrad
