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

#include "json.hpp"
#include <sstream>

#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "numrad/report.hpp"
#include "numrad/suite.hpp"

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

std::string parse_message(std::string_view text) {
  try {
    suite_config_from_json(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Parse);
    return e.what();
  }
  ADD_FAILURE() << "config parsed: " << text;
  return {};
}

SuiteConfig small_config() {
  SuiteConfig c;
  c.bounds = {BoundId::KittanehAbs, BoundId::Cor2_6, BoundId::Thm3_8, BoundId::Cor2_8};
  c.trials = 20;
  c.dim_max = 4;
  return c;
}

std::string json_without_timestamp(const SuiteReport& r) {
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
  j.erase("timestamp");
  return j.dump();
}

TEST(Ensemble, DeterministicPerSpec) {
  const EnsembleSpec spec{EnsembleKind::Ginibre, 3, 42};
  EXPECT_EQ(generate(spec), generate(spec));
  EXPECT_NE(generate(spec), generate(EnsembleSpec{EnsembleKind::Ginibre, 3, 43}));
}

TEST(Ensemble, KindInvariants) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (int n = 1; n <= 8; ++n) {
      const ComplexMatrix sq = generate({EnsembleKind::NilpotentSquareZero, n, seed});
      EXPECT_LE(operator_norm(sq * sq), 1e-12);
      const ComplexMatrix nm = generate({EnsembleKind::Normal, n, seed});
      const double nn = operator_norm(nm);
      EXPECT_LE(operator_norm(adjoint_times(nm, nm) - times_adjoint(nm, nm)), 1e-10 * nn * nn);
      const ComplexMatrix wi = generate({EnsembleKind::Wishart, n, seed});
      EXPECT_GE(herm_eig(wi).eigenvalues.front(), -1e-12);
      EXPECT_TRUE(is_hermitian(generate({EnsembleKind::GUE, n, seed}), 0.0));
      EXPECT_NEAR(operator_norm(generate({EnsembleKind::Ginibre, n, seed})), 5.0, 1e-9);
    }
  }
}

TEST(Ensemble, RawDrawAndNames) {
  const ComplexMatrix raw = generate({EnsembleKind::Ginibre, 4, 7, std::nullopt});
  EXPECT_GT(operator_norm(raw), 0.0);
  for (EnsembleKind k : {EnsembleKind::Ginibre, EnsembleKind::GUE, EnsembleKind::Wishart,
                         EnsembleKind::NilpotentSquareZero, EnsembleKind::Normal}) {
    EXPECT_EQ(ensemble_from_string(to_string(k)), k);
  }
  expect_error(Errc::Parse, [] { ensemble_from_string("haar"); });
}

TEST(Ensemble, DimensionRange) {
  expect_error(Errc::DimOutOfRange, [] { generate({EnsembleKind::GUE, 0, 1}); });
  expect_error(Errc::DimOutOfRange, [] { generate({EnsembleKind::GUE, 33, 1}); });
  EXPECT_EQ(generate({EnsembleKind::GUE, 32, 1}).rows(), 32u);
}

TEST(SuiteConfigJson, ParsesEveryField) {
  const SuiteConfig c = suite_config_from_json(R"({
    "bounds": ["Cor2_6", "KittanehAbs"],
    "ensembles": ["gue", "normal"],
    "trials": 7,
    "dims": [2, 3],
    "seed": 99,
    "tol": 1e-10,
    "pass_tol": 1e-8,
    "rescale": null,
    "gate_hypotheses": false,
    "constrain_operands": false,
    "params": {"gauge": "expm1:s=0.5", "alpha": 0.25, "r": 1.5},
    "jobs": 3
  })");
  EXPECT_EQ(c.bounds, (std::vector<BoundId>{BoundId::Cor2_6, BoundId::KittanehAbs}));
  EXPECT_EQ(c.ensembles, (std::vector<EnsembleKind>{EnsembleKind::GUE, EnsembleKind::Normal}));
  EXPECT_EQ(c.trials, 7u);
  EXPECT_EQ(c.dim_min, 2);
  EXPECT_EQ(c.dim_max, 3);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_FALSE(c.rescale.has_value());
  EXPECT_FALSE(c.gate_hypotheses);
  EXPECT_FALSE(c.constrain_operands);
  EXPECT_EQ(c.param_mode, ParamMode::Fixed);
  EXPECT_EQ(*c.fixed_params.gauge, GaugeH::expm1(0.5));
  EXPECT_EQ(*c.fixed_params.alpha, 0.25);
  EXPECT_EQ(c.jobs, 3);
}

TEST(SuiteConfigJson, DefaultsAndEffectiveSets) {
  const SuiteConfig c = suite_config_from_json("{}");
  EXPECT_EQ(c.trials, 1000u);
  EXPECT_EQ(effective_bounds(c).size(), kBoundCount);
  EXPECT_EQ(effective_ensembles(c).size(), 5u);
}

TEST(SuiteConfigJson, DiagnosticsNameFieldAndLine) {
  const std::string unknown = parse_message("{\n  \"trials\": 5,\n  \"trails\": 5\n}");
  EXPECT_NE(unknown.find("trails"), std::string::npos) << unknown;
  EXPECT_NE(unknown.find("line 3"), std::string::npos) << unknown;

  const std::string type = parse_message("{\n\"trials\": \"many\"\n}");
  EXPECT_NE(type.find("trials"), std::string::npos) << type;
  EXPECT_NE(type.find("line 2"), std::string::npos) << type;

  EXPECT_NE(parse_message(R"({"bounds": ["Nope"]})").find("bounds"), std::string::npos);
  EXPECT_NE(parse_message(R"({"dims": [4, 2]})").find("dims"), std::string::npos);
  EXPECT_NE(parse_message(R"({"params": {"gauge": "power:r=0.5x"}})").find("gauge"),
            std::string::npos);
  const std::string syntax = parse_message("{\n\"trials\": 5,,\n}");
  EXPECT_NE(syntax.find("line 2"), std::string::npos) << syntax;
  expect_error(Errc::Parse, [] { read_suite_config("/nonexistent/suite.json"); });
}

TEST(Suite, DeterministicAcrossRunsAndJobCounts) {
  SuiteConfig c = small_config();
  const std::string first = json_without_timestamp(run_suite(c));
  EXPECT_EQ(first, json_without_timestamp(run_suite(c)));
  c.jobs = 4;
  // jobs is part of the echoed config, so compare the tallies only.
  auto a = nlohmann::json::parse(first)["bounds"];
  auto b = nlohmann::json::parse(json_without_timestamp(run_suite(c)))["bounds"];
  EXPECT_EQ(a, b);
}

TEST(Suite, SmallRunPasses) {
  const SuiteReport r = run_suite(small_config());
  ASSERT_EQ(r.tallies.size(), 4u);
  EXPECT_EQ(r.total_trials(), 80u);
  EXPECT_EQ(r.total_failures(), 0u);
  std::size_t sum = 0;
  for (const BoundTally& t : r.tallies) {
    sum += t.trials;
    EXPECT_EQ(t.passes + t.failures + t.skipped, t.trials);
    EXPECT_EQ(t.errors, 0u);
  }
  EXPECT_EQ(sum, r.total_trials());
}

TEST(Suite, GatingSkipsHypothesisViolations) {
  SuiteConfig c;
  c.bounds = {BoundId::Cor2_8};
  c.ensembles = {EnsembleKind::Ginibre};
  c.constrain_operands = false;
  c.dim_min = 2;  // 1x1 operands are always normal
  c.trials = 50;
  const SuiteReport r = run_suite(c);
  ASSERT_EQ(r.tallies.size(), 1u);
  EXPECT_EQ(r.tallies[0].skipped, 50u);
  EXPECT_EQ(r.tallies[0].failures, 0u);
  EXPECT_EQ(r.total_skipped(), 50u);
}

TEST(Suite, WorstDigestRegeneratesInstance) {
  const SuiteConfig c = small_config();
  const SuiteReport r = run_suite(c);
  for (std::size_t k = 0; k < r.tallies.size(); ++k) {
    const BoundTally& t = r.tallies[k];
    ASSERT_TRUE(t.worst.has_value()) << t.label;
    const BoundId id = c.bounds[k];
    const TrialInstance inst = make_instance(c, id, t.worst->trial);
    EXPECT_EQ(inst.digest.seed, t.worst->seed);
    EXPECT_EQ(inst.digest.kind, t.worst->kind);
    EXPECT_EQ(inst.digest.dim, t.worst->dim);
    const BoundReport rep = evaluate_bound(id, inst.blocks, inst.params, c.tol);
    EXPECT_EQ(rep.slack, t.worst_slack) << t.label;
  }
}

TEST(Suite, TrialDataIndependentOfBoundSelection) {
  SuiteConfig one;
  one.bounds = {BoundId::Cor2_6};
  SuiteConfig many = one;
  many.bounds = {BoundId::KittanehAbs, BoundId::Cor2_6};
  for (std::size_t t = 0; t < 10; ++t) {
    EXPECT_EQ(make_instance(one, BoundId::Cor2_6, t).blocks.b(),
              make_instance(many, BoundId::Cor2_6, t).blocks.b());
  }
}

TEST(Report, CsvRowsMatchBounds) {
  const SuiteReport r = run_suite(small_config());
  const std::string csv = emit_report(r, ReportFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "bound_id,trials,passes,worst_slack,worst_seed");
  std::size_t rows = 1;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, r.tallies.size() + 1);
}

TEST(Report, JsonRoundTrip) {
  const SuiteReport r = run_suite(small_config());
  const std::string text = emit_report(r, ReportFormat::Json);
  const SuiteReport back = suite_report_from_json(text);
  EXPECT_EQ(emit_report(back, ReportFormat::Json), text);
  ASSERT_EQ(back.tallies.size(), r.tallies.size());
  EXPECT_EQ(back.tallies[1].worst_slack, r.tallies[1].worst_slack);
  EXPECT_EQ(back.config->seed, r.config->seed);
  expect_error(Errc::Parse, [] { suite_report_from_json("[]"); });
}

TEST(Report, EmptyReportIsValidJson) {
  const SuiteReport empty;
  const auto j = nlohmann::json::parse(emit_report(empty, ReportFormat::Json));
  ASSERT_TRUE(j["bounds"].is_array());
  EXPECT_TRUE(j["bounds"].empty());
  EXPECT_EQ(j["totals"]["trials"], 0);
  EXPECT_EQ(emit_report(empty, ReportFormat::Csv), "bound_id,trials,passes,worst_slack,worst_seed\n");
  EXPECT_FALSE(emit_report(empty, ReportFormat::Text).empty());
  expect_error(Errc::Parse, [] { report_format_from_string("xml"); });
}

TEST(Sharpness, AllConstructionsAttainEquality) {
  const SuiteReport r = sharpness_suite();
  ASSERT_FALSE(r.tallies.empty());
  for (const BoundTally& t : r.tallies) {
    EXPECT_EQ(t.failures, 0u) << t.label << " worst " << t.worst_slack;
    EXPECT_GT(t.trials, 0u);
  }
}

}  // namespace
}  // namespace numrad
