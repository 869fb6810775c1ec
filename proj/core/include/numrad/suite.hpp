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
#include <string>
#include <string_view>
#include <vector>

#include "numrad/block.hpp"
#include "numrad/bounds.hpp"
#include "numrad/ensemble.hpp"

namespace numrad {

enum class ParamMode { Random, Fixed };

struct SuiteConfig {
  std::vector<BoundId> bounds;             // empty means every catalog id
  std::vector<EnsembleKind> ensembles;     // empty means all five kinds
  std::size_t trials = 1000;               // per bound
  int dim_min = 1;
  int dim_max = 8;
  std::uint64_t seed = 20260101;
  double tol = 1e-9;                       // radius certification tolerance
  double pass_tol = 1e-7;                  // trial passes iff slack >= -pass_tol * scale
  std::optional<double> rescale = 5.0;
  bool gate_hypotheses = true;             // skip hypothesis-violating trials
  bool constrain_operands = true;          // draw hypothesis-bearing operands from a valid ensemble
  ParamMode param_mode = ParamMode::Random;
  BoundParams fixed_params;                // Fixed mode; gaps are filled with defaults
  int jobs = 1;                            // does not affect results
};

/// Parses the suite JSON. Errors are Errc::Parse with the field name and line number.
SuiteConfig suite_config_from_json(std::string_view text);
SuiteConfig read_suite_config(const std::string& path);

/// Bound ids and ensembles with the empty-list defaults expanded.
std::vector<BoundId> effective_bounds(const SuiteConfig& config);
std::vector<EnsembleKind> effective_ensembles(const SuiteConfig& config);

/// Enough to regenerate a trial: the trial seed plus where it sits in the suite.
struct InstanceDigest {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  EnsembleKind kind = EnsembleKind::Ginibre;
  int dim = 1;
};

struct TrialInstance {
  BlockMatrix2x2 blocks;
  BoundParams params;
  InstanceDigest digest;
};

/// Pure function of (config, id, trial); the worst-case digests in a report point here.
TrialInstance make_instance(const SuiteConfig& config, BoundId id, std::size_t trial);

struct BoundTally {
  std::string label;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;  // evaluation threw; counted as failures too
  double worst_slack = 0.0;      // raw slack of the worst trial
  double worst_rel_slack = 0.0;  // slack / max(1, |lhs|, |rhs|) of the worst trial
  double max_rel_tol = 0.0;      // largest tol_effective / scale seen
  std::optional<InstanceDigest> worst;
};

struct SuiteReport {
  std::optional<SuiteConfig> config;
  std::vector<BoundTally> tallies;
  double wall_time_s = 0.0;
  std::string generated_at;

  std::size_t total_trials() const noexcept;
  std::size_t total_failures() const noexcept;
  std::size_t total_skipped() const noexcept;
};

/// Runs every (bound, trial) pair on `config.jobs` workers; the reduce is index-ordered.
SuiteReport run_suite(const SuiteConfig& config);

/// Equality configurations: the two explicit sharp constructions, w = ||A|| on normal
/// matrices, w = ||A||/2 and the squared lower bound on square-zero matrices.
SuiteReport sharpness_suite();

}  // namespace numrad
