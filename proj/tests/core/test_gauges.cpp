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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "numrad/error.hpp"
#include "numrad/gauges.hpp"
#include "numrad/linalg.hpp"
#include "numrad/numrange.hpp"
#include "oracles.hpp"

namespace numrad {
namespace {

void expect_error(Errc code, const auto& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<GaugeH> sample_gauges() {
  return {GaugeH::power(1.0), GaugeH::power(2.0), GaugeH::power(3.5), GaugeH::expm1(0.1),
          GaugeH::expm1(1.0), GaugeH::hinge(0.0), GaugeH::hinge(1.5)};
}

TEST(GaugeEval, Examples) {
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeH::power(2.0), 3.0), 9.0);
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeH::power(1.0), 0.0), 0.0);
  EXPECT_NEAR(gauge_eval(GaugeH::expm1(1.0), 1.0), std::exp(1.0) - 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeH::hinge(1.0), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeH::hinge(1.0), 3.0), 2.0);
}

TEST(GaugeEval, RejectsNegativeArgument) {
  expect_error(Errc::NegativeInput, [] { gauge_eval(GaugeH::power(2.0), -1.0); });
  expect_error(Errc::NegativeInput, [] { factor_eval(FactorPair{0.5}, -0.1); });
}

TEST(ValidateGauge, AcceptsCatalogFamilies) {
  for (const GaugeH& h : sample_gauges()) {
    const GaugeValidity v = validate_gauge(h);
    EXPECT_TRUE(v.valid) << to_string(h);
    EXPECT_TRUE(v.nonnegative_at_zero && v.monotone && v.convex) << to_string(h);
    EXPECT_TRUE(v.failures.empty());
  }
}

TEST(ValidateGauge, RejectsOutOfRangeParameters) {
  const GaugeValidity sub = validate_gauge(GaugeH::power(0.5));
  EXPECT_FALSE(sub.valid);
  EXPECT_FALSE(sub.convex);
  EXPECT_LT(sub.worst_second_difference, 0.0);
  EXPECT_FALSE(validate_gauge(GaugeH::expm1(0.0)).valid);
  EXPECT_FALSE(validate_gauge(GaugeH::expm1(-1.0)).valid);
  EXPECT_FALSE(validate_gauge(GaugeH::hinge(-0.5)).valid);
  EXPECT_FALSE(validate_gauge(GaugeH::power(std::nan(""))).valid);
}

TEST(ValidateGauge, ConvexityOnRandomTriples) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::uniform_real_distribution<double> lam(0.0, 1.0);
  for (const GaugeH& h : sample_gauges()) {
    for (int k = 0; k < 2000; ++k) {
      const double a = u(rng);
      const double b = u(rng);
      const double l = lam(rng);
      const double mid = gauge_eval(h, l * a + (1 - l) * b);
      const double chord = l * gauge_eval(h, a) + (1 - l) * gauge_eval(h, b);
      ASSERT_LE(mid, chord + 1e-12 * std::max(1.0, chord)) << to_string(h);
      if (a <= b) ASSERT_LE(gauge_eval(h, a), gauge_eval(h, b)) << to_string(h);
    }
  }
}

TEST(FactorPair, ProductRecoversIdentity) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const FactorPair pair{u(rng)};
    const double t = 5.0 * u(rng);
    const FactorValues fv = factor_eval(pair, t);
    EXPECT_NEAR(fv.f * fv.g, t, 1e-12 * std::max(1.0, t));
  }
  EXPECT_TRUE(factor_pair_valid(FactorPair{0.0}));
  EXPECT_TRUE(factor_pair_valid(FactorPair{1.0}));
  EXPECT_FALSE(factor_pair_valid(FactorPair{1.01}));
}

TEST(Holder, Conjugates) {
  EXPECT_EQ(holder_conjugate(2.0), (HolderPair{2.0, 2.0}));
  EXPECT_NEAR(holder_conjugate(3.0).q, 1.5, 1e-15);
  EXPECT_TRUE(holder_pair_valid(holder_conjugate(1.1)));
  EXPECT_FALSE(holder_pair_valid(HolderPair{2.0, 3.0}));
  EXPECT_FALSE(holder_pair_valid(HolderPair{1.0, 1e300}));
  expect_error(Errc::OutOfRange, [] { holder_conjugate(1.0); });
  expect_error(Errc::OutOfRange, [] { holder_conjugate(0.5); });
}

TEST(Holder, ScalarYoungInequality) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  std::uniform_real_distribution<double> pe(1.05, 6.0);
  for (int k = 0; k < 5000; ++k) {
    const HolderPair hp = holder_conjugate(pe(rng));
    const double a = u(rng);
    const double b = u(rng);
    const double rhs = std::pow(a, hp.p) / hp.p + std::pow(b, hp.q) / hp.q;
    ASSERT_LE(a * b, rhs * (1 + 1e-12) + 1e-15);
  }
}

TEST(Parsers, RoundTrip) {
  for (const GaugeH& h : sample_gauges()) EXPECT_EQ(parse_gauge(to_string(h)), h);
  EXPECT_EQ(parse_gauge("power:r=2"), GaugeH::power(2.0));
  EXPECT_EQ(parse_gauge("expm1:s=0.25"), GaugeH::expm1(0.25));
  EXPECT_EQ(parse_gauge("hinge:c=1"), GaugeH::hinge(1.0));
  EXPECT_EQ(parse_factor_pair("alpha=0.25"), FactorPair{0.25});
  EXPECT_EQ(parse_factor_pair("0.75"), FactorPair{0.75});
  const FactorQuad quad{{0.2}, {0.9}};
  EXPECT_EQ(parse_factor_quad(to_string(quad)), quad);
  EXPECT_EQ(parse_holder("p=3").q, 1.5);
  EXPECT_EQ(parse_holder(to_string(HolderPair{4.0, 4.0 / 3.0})).p, 4.0);
}

TEST(Parsers, Diagnostics) {
  expect_error(Errc::Parse, [] { parse_gauge("power"); });
  expect_error(Errc::Parse, [] { parse_gauge("cosh:r=2"); });
  expect_error(Errc::Parse, [] { parse_gauge("power:s=2"); });
  expect_error(Errc::Parse, [] { parse_gauge("power:r=two"); });
  expect_error(Errc::InvalidPair, [] { parse_factor_pair("alpha=2"); });
  expect_error(Errc::Parse, [] { parse_factor_quad("alpha1=0.5"); });
  expect_error(Errc::InvalidPair, [] { parse_factor_quad("alpha1=0.5,alpha2=-1"); });
  expect_error(Errc::OutOfRange, [] { parse_holder("p=1"); });
}

// Scalar Jensen form of a convex gauge applied through the functional calculus:
// h(<P x, x>) <= <h(P) x, x> for PSD P and unit x.
TEST(GaugeFunctionalCalculus, JensenForEveryFamily) {
  std::mt19937_64 rng(4);
  for (const GaugeH& h : sample_gauges()) {
    const auto phi = [h](double t) { return gauge_eval(h, t); };
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + k % 5;
      ComplexMatrix p = testing::random_psd(n, rng);
      p *= 3.0 / std::max(1e-12, operator_norm(p));
      const ScalarCheck c = check_jensen(p, testing::random_unit_vector(n, rng), phi);
      ASSERT_TRUE(c.holds) << to_string(h) << " " << c.lhs << " > " << c.rhs;
    }
  }
}

// A monotone gauge commutes with the norm of a PSD matrix: ||h(P)|| = h(||P||).
TEST(GaugeFunctionalCalculus, NormCommutesWithMonotoneGauge) {
  std::mt19937_64 rng(5);
  for (const GaugeH& h : sample_gauges()) {
    const auto phi = [h](double t) { return gauge_eval(h, t); };
    for (int k = 0; k < 50; ++k) {
      ComplexMatrix p = testing::random_psd(1 + k % 6, rng);
      p *= 4.0 / std::max(1e-12, operator_norm(p));
      const double expect = gauge_eval(h, operator_norm(p));
      EXPECT_NEAR(operator_norm(matfun_psd(p, phi)), expect, 1e-10 * std::max(1.0, expect))
          << to_string(h);
    }
  }
}

}  // namespace
}  // namespace numrad
