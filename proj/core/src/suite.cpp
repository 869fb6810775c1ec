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

#include "numrad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "numrad/numrange.hpp"
#include "numrad/seed.hpp"

namespace numrad {
namespace {

using nlohmann::json;

constexpr EnsembleKind kAllKinds[] = {EnsembleKind::Ginibre, EnsembleKind::GUE,
                                      EnsembleKind::Wishart, EnsembleKind::NilpotentSquareZero,
                                      EnsembleKind::Normal};

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first `"key"` token, or 0 when absent.
std::size_t line_of_key(std::string_view text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

class ConfigReader {
 public:
  explicit ConfigReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    const std::size_t line = line_of_key(text_, field);
    std::string where = "field '" + field + "'";
    if (line > 0) where += " (line " + std::to_string(line) + ")";
    throw Error(Errc::Parse, "suite config: " + where + ": " + what);
  }

  SuiteConfig read() {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw Error(Errc::Parse, "suite config: line " +
                                   std::to_string(line_of_offset(text_, e.byte > 0 ? e.byte - 1 : 0)) +
                                   ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) throw Error(Errc::Parse, "suite config: top level must be an object");
    SuiteConfig c;
    for (const auto& [key, value] : doc.items()) {
      if (key == "bounds") {
        c.bounds = read_bounds(key, value);
      } else if (key == "ensembles") {
        c.ensembles = read_ensembles(key, value);
      } else if (key == "trials") {
        c.trials = static_cast<std::size_t>(read_int(key, value, 1, 100000000));
      } else if (key == "dims") {
        if (!value.is_array() || value.size() != 2) fail(key, "expected [min, max]");
        c.dim_min = static_cast<int>(read_int(key, value[0], 1, 32));
        c.dim_max = static_cast<int>(read_int(key, value[1], 1, 32));
        if (c.dim_min > c.dim_max) fail(key, "min exceeds max");
      } else if (key == "seed") {
        if (!value.is_number_integer()) fail(key, "expected an unsigned integer");
        c.seed = value.is_number_unsigned() ? value.get<std::uint64_t>()
                                            : static_cast<std::uint64_t>(value.get<std::int64_t>());
      } else if (key == "tol") {
        c.tol = read_positive(key, value);
        if (c.tol < 1e-12) fail(key, "must be >= 1e-12");
      } else if (key == "pass_tol") {
        c.pass_tol = read_positive(key, value);
      } else if (key == "rescale") {
        if (value.is_null()) {
          c.rescale.reset();
        } else {
          c.rescale = read_positive(key, value);
        }
      } else if (key == "gate_hypotheses") {
        c.gate_hypotheses = read_bool(key, value);
      } else if (key == "constrain_operands") {
        c.constrain_operands = read_bool(key, value);
      } else if (key == "params") {
        read_params(key, value, c);
      } else if (key == "jobs") {
        c.jobs = static_cast<int>(read_int(key, value, 0, 1024));
      } else {
        fail(key, "unknown field");
      }
    }
    return c;
  }

 private:
  long long read_int(const std::string& key, const json& v, long long lo, long long hi) const {
    if (!v.is_number_integer()) fail(key, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi) {
      fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return x;
  }
  double read_positive(const std::string& key, const json& v) const {
    if (!v.is_number()) fail(key, "expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) fail(key, "must be a positive finite number");
    return x;
  }
  bool read_bool(const std::string& key, const json& v) const {
    if (!v.is_boolean()) fail(key, "expected true or false");
    return v.get<bool>();
  }
  std::string read_string(const std::string& key, const json& v) const {
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  std::vector<BoundId> read_bounds(const std::string& key, const json& v) const {
    if (v.is_string() && v.get<std::string>() == "all") return {};
    if (!v.is_array()) fail(key, "expected \"all\" or an array of bound ids");
    std::vector<BoundId> out;
    for (const auto& e : v) {
      const std::string name = read_string(key, e);
      if (name == "all") return {};
      try {
        out.push_back(bound_from_string(name));
      } catch (const Error& err) {
        fail(key, err.detail());
      }
    }
    return out;
  }

  std::vector<EnsembleKind> read_ensembles(const std::string& key, const json& v) const {
    if (v.is_string() && v.get<std::string>() == "all") return {};
    if (!v.is_array() || v.empty()) fail(key, "expected \"all\" or a non-empty array");
    std::vector<EnsembleKind> out;
    for (const auto& e : v) {
      try {
        out.push_back(ensemble_from_string(read_string(key, e)));
      } catch (const Error& err) {
        fail(key, err.detail());
      }
    }
    return out;
  }

  void read_params(const std::string& key, const json& v, SuiteConfig& c) const {
    if (v.is_string()) {
      if (v.get<std::string>() != "random") fail(key, "expected \"random\" or an object");
      c.param_mode = ParamMode::Random;
      return;
    }
    if (!v.is_object()) fail(key, "expected \"random\" or an object");
    c.param_mode = ParamMode::Fixed;
    BoundParams& p = c.fixed_params;
    for (const auto& [name, value] : v.items()) {
      try {
        if (name == "gauge") {
          p.gauge = parse_gauge(read_string(name, value));
        } else if (name == "pair") {
          p.pair = FactorPair{read_unit(name, value)};
        } else if (name == "alpha") {
          p.alpha = read_unit(name, value);
        } else if (name == "quad") {
          p.quad = parse_factor_quad(read_string(name, value));
        } else if (name == "p") {
          if (!value.is_number()) fail(name, "expected a number");
          p.holder = holder_conjugate(value.get<double>());
        } else if (name == "r") {
          p.r = read_positive(name, value);
        } else if (name == "n") {
          p.n = static_cast<int>(read_int(name, value, 1, 64));
        } else {
          fail(name, "unknown parameter");
        }
      } catch (const Error& err) {
        if (err.code() == Errc::Parse && err.detail().rfind("suite config:", 0) == 0) throw;
        fail(name, err.detail());
      }
    }
  }

  double read_unit(const std::string& key, const json& v) const {
    if (!v.is_number()) fail(key, "expected a number");
    const double x = v.get<double>();
    if (x < 0.0 || x > 1.0) fail(key, "must lie in [0, 1]");
    return x;
  }

  std::string_view text_;
};

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

BoundParams default_params() {
  BoundParams p;
  p.gauge = GaugeH::power(2.0);
  p.pair = FactorPair{0.5};
  p.quad = FactorQuad{{0.5}, {0.5}};
  p.holder = holder_conjugate(2.0);
  p.r = 2.0;
  p.alpha = 0.5;
  p.n = 2;
  return p;
}

BoundParams fill_defaults(BoundParams p) {
  const BoundParams d = default_params();
  if (!p.gauge) p.gauge = d.gauge;
  if (!p.pair) p.pair = d.pair;
  if (!p.quad) p.quad = d.quad;
  if (!p.holder) p.holder = d.holder;
  if (!p.r) p.r = d.r;
  if (!p.alpha) p.alpha = d.alpha;
  if (!p.n) p.n = d.n;
  return p;
}

BoundParams random_params(BoundId id, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  BoundParams p;
  const int family = static_cast<int>(rng() % 3);
  if (family == 0) p.gauge = GaugeH::power(uniform(1.0, 3.0));
  if (family == 1) p.gauge = GaugeH::expm1(uniform(0.1, 1.0));
  if (family == 2) p.gauge = GaugeH::hinge(uniform(0.0, 2.0));
  p.pair = FactorPair{unit(rng)};
  p.alpha = unit(rng);
  p.quad = FactorQuad{{unit(rng)}, {unit(rng)}};
  p.holder = holder_conjugate(uniform(1.1, 4.0));
  p.n = 1 + static_cast<int>(rng() % 4);
  const double u = unit(rng);
  switch (r_constraint(id)) {
    case RConstraint::AtLeastTwo: p.r = 2.0 + 2.0 * u; break;
    case RConstraint::HolderScaled: {
      const double r0 = 2.0 / std::min(p.holder->p, p.holder->q);
      p.r = r0 + 1.5 * u;
      break;
    }
    case RConstraint::AtLeastOne:
    case RConstraint::None: p.r = 1.0 + 2.0 * u; break;
  }
  return p;
}

// Largest exponent applied to a singular value or to w before the gauge is evaluated.
// Zero for ids without a gauge.
double gauge_exponent(BoundId id, const BoundParams& p) {
  switch (id) {
    case BoundId::Thm2_5:
    case BoundId::Thm3_1:
    case BoundId::Cor3_3:
    case BoundId::Thm3_5:
      return std::max({1.0, 2.0 * p.pair->alpha, 2.0 * (1.0 - p.pair->alpha)});
    case BoundId::Thm3_8:
      return std::max({*p.r, p.holder->p * *p.r * p.pair->alpha,
                       p.holder->q * *p.r * (1.0 - p.pair->alpha)});
    default:
      return 0.0;
  }
}

enum class Verdict { Pass, Fail, Skip, Error };

struct Outcome {
  Verdict verdict = Verdict::Skip;
  double slack = 0.0;
  double rel_slack = 0.0;
  double rel_tol = 0.0;
  InstanceDigest digest;
};

Outcome run_trial(const SuiteConfig& config, BoundId id, std::size_t trial) {
  Outcome out;
  try {
    const TrialInstance inst = make_instance(config, id, trial);
    out.digest = inst.digest;
    if (config.gate_hypotheses && !check_hypotheses(id, inst.blocks, inst.params).ok) {
      out.verdict = Verdict::Skip;
      return out;
    }
    const BoundReport r = evaluate_bound(id, inst.blocks, inst.params, config.tol);
    const double scale = std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
    out.slack = r.slack;
    out.rel_slack = r.slack / scale;
    out.rel_tol = r.tol_effective / scale;
    out.verdict = r.slack >= -config.pass_tol * scale ? Verdict::Pass : Verdict::Fail;
  } catch (const Error&) {
    out.verdict = Verdict::Error;
    out.slack = out.rel_slack = -std::numeric_limits<double>::infinity();
  }
  return out;
}

void accumulate(BoundTally& t, const Outcome& o) {
  ++t.trials;
  switch (o.verdict) {
    case Verdict::Skip: ++t.skipped; return;
    case Verdict::Pass: ++t.passes; break;
    case Verdict::Fail: ++t.failures; break;
    case Verdict::Error: ++t.failures; ++t.errors; break;
  }
  t.max_rel_tol = std::max(t.max_rel_tol, o.rel_tol);
  if (!t.worst || o.rel_slack < t.worst_rel_slack) {
    t.worst_rel_slack = o.rel_slack;
    t.worst_slack = o.slack;
    t.worst = o.digest;
  }
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

BoundTally labelled(std::string label) {
  BoundTally t;
  t.label = std::move(label);
  return t;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

SuiteConfig suite_config_from_json(std::string_view text) { return ConfigReader(text).read(); }

SuiteConfig read_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open suite config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return suite_config_from_json(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

std::vector<BoundId> effective_bounds(const SuiteConfig& config) {
  if (!config.bounds.empty()) return config.bounds;
  const auto all = all_bounds();
  return {all.begin(), all.end()};
}

std::vector<EnsembleKind> effective_ensembles(const SuiteConfig& config) {
  if (!config.ensembles.empty()) return config.ensembles;
  return {std::begin(kAllKinds), std::end(kAllKinds)};
}

TrialInstance make_instance(const SuiteConfig& config, BoundId id, std::size_t trial) {
  const std::vector<EnsembleKind> kinds = effective_ensembles(config);
  const std::uint64_t seed = mix_seed({config.seed, name_hash(to_string(id)), trial});
  std::mt19937_64 rng(seed);
  const EnsembleKind kind = kinds[trial % kinds.size()];
  std::uniform_int_distribution<int> dim_dist(config.dim_min, config.dim_max);
  const int dim = dim_dist(rng);
  BoundParams params = config.param_mode == ParamMode::Random
                           ? random_params(id, rng)
                           : fill_defaults(config.fixed_params);

  std::optional<double> target = config.rescale;
  const double e = gauge_exponent(id, params);
  if (target && e > 0.0) target = std::min(*target, std::pow(10.0, 1.0 / e));

  auto draw = [&](EnsembleKind k) {
    return generate(EnsembleSpec{k, dim, rng(), target});
  };
  EnsembleKind kind_b = kind;
  EnsembleKind kind_c = kind;
  if (config.constrain_operands) {
    if (id == BoundId::Cor2_8) kind_c = EnsembleKind::Normal;
    if (id == BoundId::Rem2_7_PsdRho) kind_b = kind_c = EnsembleKind::Wishart;
  }
  ComplexMatrix a = draw(kind);
  ComplexMatrix b = draw(kind_b);
  ComplexMatrix c = draw(kind_c);
  ComplexMatrix d = draw(kind);
  return {BlockMatrix2x2(std::move(a), std::move(b), std::move(c), std::move(d)), params,
          InstanceDigest{seed, trial, kind, dim}};
}

std::size_t SuiteReport::total_trials() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.trials;
  return n;
}

std::size_t SuiteReport::total_failures() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failures;
  return n;
}

std::size_t SuiteReport::total_skipped() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.skipped;
  return n;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<BoundId> ids = effective_bounds(config);
  const std::size_t per = config.trials;
  std::vector<Outcome> outcomes(ids.size() * per);
  parallel_for(outcomes.size(), config.jobs, [&](std::size_t k) {
    outcomes[k] = run_trial(config, ids[k / per], k % per);
  });

  SuiteReport report;
  report.config = config;
  report.tallies.reserve(ids.size());
  for (std::size_t b = 0; b < ids.size(); ++b) {
    BoundTally tally;
    tally.label = std::string(to_string(ids[b]));
    for (std::size_t t = 0; t < per; ++t) accumulate(tally, outcomes[b * per + t]);
    report.tallies.push_back(std::move(tally));
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.generated_at = utc_now();
  return report;
}

SuiteReport sharpness_suite() {
  const auto start = std::chrono::steady_clock::now();
  constexpr double kRadiusTol = 1e-12;
  constexpr std::uint64_t kSeed = 0x5eedULL;
  SuiteReport report;

  // |slack| <= threshold counts as a pass; the worst trial is the one with largest |slack|.
  auto record = [](BoundTally& t, double slack, double threshold, InstanceDigest digest) {
    ++t.trials;
    if (std::abs(slack) <= threshold) {
      ++t.passes;
    } else {
      ++t.failures;
    }
    if (!t.worst || std::abs(slack) > std::abs(t.worst_slack)) {
      t.worst_slack = slack;
      t.worst_rel_slack = slack;
      t.worst = digest;
    }
  };

  const Complex one(1.0);
  const ComplexMatrix flip = ComplexMatrix::diagonal({one, -one});
  std::vector<std::pair<ComplexMatrix, InstanceDigest>> hermitian;
  hermitian.push_back({flip, InstanceDigest{0, 0, EnsembleKind::GUE, 2}});
  for (std::size_t k = 1; k <= 20; ++k) {
    const std::uint64_t seed = mix_seed({kSeed, 1, k});
    const int dim = 1 + static_cast<int>(k % 8);
    hermitian.push_back({generate({EnsembleKind::GUE, dim, seed, 5.0}),
                         InstanceDigest{seed, k, EnsembleKind::GUE, dim}});
  }

  BoundTally thm25 = labelled("Thm2_5_sharp");
  BoundParams p25;
  p25.gauge = GaugeH::power(1.0);
  p25.pair = FactorPair{0.5};
  BoundTally thm29 = labelled("Thm2_9a_sharp");
  BoundParams p29;
  p29.quad = FactorQuad{{0.5}, {0.5}};
  p29.holder = holder_conjugate(2.0);
  p29.r = 2.0;
  for (const auto& [b, digest] : hermitian) {
    const BlockMatrix2x2 blocks(b, b, b, b);
    record(thm25, evaluate_bound(BoundId::Thm2_5, blocks, p25, kRadiusTol).slack, 1e-6, digest);
    record(thm29, evaluate_bound(BoundId::Thm2_9a, blocks, p29, kRadiusTol).slack, 1e-6, digest);
  }
  report.tallies.push_back(std::move(thm25));
  report.tallies.push_back(std::move(thm29));

  BoundTally normal = labelled("normal_w_equals_norm");
  for (std::size_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = mix_seed({kSeed, 2, k});
    const int dim = 1 + static_cast<int>(k % 8);
    const ComplexMatrix m = generate({EnsembleKind::Normal, dim, seed, 5.0});
    record(normal, operator_norm(m) - numerical_radius(m, kRadiusTol).value, 1e-8,
           {seed, k, EnsembleKind::Normal, dim});
  }
  report.tallies.push_back(std::move(normal));

  BoundTally square_zero = labelled("square_zero_w_equals_half_norm");
  BoundTally sq_lower = labelled("KittanehSqLower_square_zero");
  for (std::size_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = mix_seed({kSeed, 3, k});
    const int dim = 2 + static_cast<int>(k % 7);
    const ComplexMatrix m = generate({EnsembleKind::NilpotentSquareZero, dim, seed, 5.0});
    const InstanceDigest digest{seed, k, EnsembleKind::NilpotentSquareZero, dim};
    record(square_zero, numerical_radius(m, kRadiusTol).value - 0.5 * operator_norm(m), 1e-8,
           digest);
    const BoundReport r =
        evaluate_bound(BoundId::KittanehSqLower, BlockMatrix2x2::uniform(m), {}, kRadiusTol);
    record(sq_lower, r.slack, 1e-8, digest);
  }
  report.tallies.push_back(std::move(square_zero));
  report.tallies.push_back(std::move(sq_lower));

  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.generated_at = utc_now();
  return report;
}

}  // namespace numrad
