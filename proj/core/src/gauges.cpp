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

#include "numrad/gauges.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "numrad/error.hpp"

namespace numrad {
namespace {

constexpr int kGridPoints = 256;
constexpr double kGridEnd = 10.0;

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(Errc::Parse, "invalid number '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

// Accepts `key=value` or a bare value.
double parse_keyed(std::string_view text, std::string_view key) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_number(text, key);
  if (text.substr(0, eq) != key) {
    throw Error(Errc::Parse, "expected '" + std::string(key) + "=<value>', got '" +
                                 std::string(text) + "'");
  }
  return parse_number(text.substr(eq + 1), key);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

double gauge_eval(const GaugeH& h, double t) {
  if (t < 0.0 || std::isnan(t)) {
    throw Error(Errc::NegativeInput, "gauge argument must be >= 0, got " + fmt(t));
  }
  switch (h.family) {
    case GaugeFamily::Power:
      return std::pow(t, h.param);
    case GaugeFamily::ExpM1:
      return std::expm1(h.param * t);
    case GaugeFamily::Hinge:
      return std::max(0.0, t - h.param);
  }
  return 0.0;
}

GaugeValidity validate_gauge(const GaugeH& h) {
  GaugeValidity out;
  auto fail = [&](std::string msg) {
    out.valid = false;
    out.failures.push_back(std::move(msg));
  };
  switch (h.family) {
    case GaugeFamily::Power:
      if (!(h.param >= 1.0)) fail("power exponent r must be >= 1");
      break;
    case GaugeFamily::ExpM1:
      if (!(h.param > 0.0)) fail("expm1 rate s must be > 0");
      break;
    case GaugeFamily::Hinge:
      if (!(h.param >= 0.0)) fail("hinge offset c must be >= 0");
      break;
  }
  if (!std::isfinite(h.param)) {
    fail("gauge parameter must be finite");
    return out;
  }

  std::vector<double> v(kGridPoints);
  const double step = kGridEnd / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) v[i] = gauge_eval(h, step * i);
  if (v[0] < 0.0) {
    out.nonnegative_at_zero = false;
    fail("h(0) < 0");
  }
  for (int i = 1; i < kGridPoints; ++i) {
    if (v[i] < v[i - 1] - 1e-12 * std::max(1.0, std::abs(v[i - 1]))) {
      out.monotone = false;
      fail("h decreases near t = " + fmt(step * i));
      break;
    }
  }
  for (int i = 1; i + 1 < kGridPoints; ++i) {
    const double d2 = v[i + 1] - 2.0 * v[i] + v[i - 1];
    out.worst_second_difference = std::min(out.worst_second_difference, d2);
    if (d2 < -1e-9 * std::max(1.0, std::abs(v[i]))) {
      if (out.convex) fail("h not convex near t = " + fmt(step * i));
      out.convex = false;
    }
  }
  return out;
}

FactorValues factor_eval(const FactorPair& pair, double t) {
  if (t < 0.0 || std::isnan(t)) {
    throw Error(Errc::NegativeInput, "factor argument must be >= 0, got " + fmt(t));
  }
  return {std::pow(t, pair.alpha), std::pow(t, 1.0 - pair.alpha)};
}

bool factor_pair_valid(const FactorPair& pair) noexcept {
  return pair.alpha >= 0.0 && pair.alpha <= 1.0;
}

bool holder_pair_valid(const HolderPair& pair) noexcept {
  return pair.p > 1.0 && pair.q > 1.0 && std::abs(1.0 / pair.p + 1.0 / pair.q - 1.0) <= 1e-12;
}

HolderPair holder_conjugate(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(Errc::OutOfRange, "Hoelder exponent p must be > 1, got " + fmt(p));
  }
  return {p, p / (p - 1.0)};
}

GaugeH parse_gauge(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::Parse, "gauge literal '" + std::string(text) +
                                 "' must look like power:r=2, expm1:s=1 or hinge:c=0.5");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (family == "power") return GaugeH::power(parse_keyed(rest, "r"));
  if (family == "expm1") return GaugeH::expm1(parse_keyed(rest, "s"));
  if (family == "hinge") return GaugeH::hinge(parse_keyed(rest, "c"));
  throw Error(Errc::Parse, "unknown gauge family '" + std::string(family) + "'");
}

FactorPair parse_factor_pair(std::string_view text) {
  FactorPair pair{parse_keyed(text, "alpha")};
  if (!factor_pair_valid(pair)) {
    throw Error(Errc::InvalidPair, "alpha must lie in [0, 1], got " + fmt(pair.alpha));
  }
  return pair;
}

FactorQuad parse_factor_quad(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(Errc::Parse, "factor quad literal must look like alpha1=0.5,alpha2=0.5");
  }
  FactorQuad quad{{parse_keyed(text.substr(0, comma), "alpha1")},
                  {parse_keyed(text.substr(comma + 1), "alpha2")}};
  if (!factor_pair_valid(quad.pair1) || !factor_pair_valid(quad.pair2)) {
    throw Error(Errc::InvalidPair, "alpha1 and alpha2 must lie in [0, 1]");
  }
  return quad;
}

HolderPair parse_holder(std::string_view text) {
  return holder_conjugate(parse_keyed(text, "p"));
}

std::string to_string(const GaugeH& h) {
  switch (h.family) {
    case GaugeFamily::Power: return "power:r=" + fmt(h.param);
    case GaugeFamily::ExpM1: return "expm1:s=" + fmt(h.param);
    case GaugeFamily::Hinge: return "hinge:c=" + fmt(h.param);
  }
  return "?";
}

std::string to_string(const FactorPair& pair) { return "alpha=" + fmt(pair.alpha); }

std::string to_string(const FactorQuad& quad) {
  return "alpha1=" + fmt(quad.pair1.alpha) + ",alpha2=" + fmt(quad.pair2.alpha);
}

std::string to_string(const HolderPair& pair) { return "p=" + fmt(pair.p); }

}  // namespace numrad
