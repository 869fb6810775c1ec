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

// numrad command-line tool: evaluate, check, compare and radius subcommands.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "numrad/block.hpp"
#include "numrad/bounds.hpp"
#include "numrad/error.hpp"
#include "numrad/matrix_json.hpp"
#include "numrad/numrange.hpp"
#include "numrad/report.hpp"
#include "numrad/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
  std::string gauge = "power:r=2";
  double alpha = 0.5;
  std::string quad;  // defaults to both alphas equal to --alpha
  double p = 2.0;
  double r = 2.0;
  int n = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--gauge", gauge, "Gauge h: power:r=<r>, expm1:s=<s> or hinge:c=<c>")
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "Exponent split alpha in [0, 1]")->capture_default_str();
    cmd->add_option("--quad", quad, "Factor quad alpha1=<a>,alpha2=<b> (default: both --alpha)");
    cmd->add_option("--p", p, "Hoelder exponent p > 1 (q = p/(p-1))")->capture_default_str();
    cmd->add_option("--r", r, "Power r")->capture_default_str();
    cmd->add_option("--n", n, "Power n for PowerInequality")->capture_default_str();
  }

  numrad::BoundParams build() const {
    numrad::BoundParams out;
    out.gauge = numrad::parse_gauge(gauge);
    out.pair = numrad::FactorPair{alpha};
    if (!numrad::factor_pair_valid(*out.pair)) {
      throw numrad::Error(numrad::Errc::InvalidPair, "--alpha must lie in [0, 1]");
    }
    out.alpha = alpha;
    out.quad = quad.empty() ? numrad::FactorQuad{{alpha}, {alpha}} : numrad::parse_factor_quad(quad);
    out.holder = numrad::holder_conjugate(p);
    out.r = r;
    out.n = n;
    return out;
  }
};

struct Operands {
  std::string matrix;
  std::vector<std::string> blocks;

  void attach(CLI::App* cmd) {
    cmd->add_option("--matrix", matrix, "Matrix JSON file; used for every block");
    cmd->add_option("--blocks", blocks, "Four block files a b c d")->expected(4);
  }

  numrad::BlockMatrix2x2 load() const {
    if (!blocks.empty()) {
      return numrad::BlockMatrix2x2(
          numrad::read_matrix_file(blocks[0]), numrad::read_matrix_file(blocks[1]),
          numrad::read_matrix_file(blocks[2]), numrad::read_matrix_file(blocks[3]));
    }
    if (matrix.empty()) throw CLI::RequiredError("--matrix or --blocks");
    return numrad::BlockMatrix2x2::uniform(numrad::read_matrix_file(matrix));
  }
};

std::vector<numrad::BoundId> parse_id_list(const std::string& text) {
  if (text == "all") {
    const auto all = numrad::all_bounds();
    return {all.begin(), all.end()};
  }
  std::vector<numrad::BoundId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ids.push_back(numrad::bound_from_string(item));
  }
  if (ids.empty()) throw numrad::Error(numrad::Errc::UnknownBound, "no bound ids given");
  return ids;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw numrad::Error(numrad::Errc::Parse, "cannot write '" + path + "'");
  out << content;
}

int finish_suite(const numrad::SuiteReport& report, const std::string& out_path,
                 const std::string& format) {
  const auto fmt = numrad::report_format_from_string(format);
  if (out_path.empty()) {
    std::cout << numrad::emit_report(report, fmt);
  } else {
    write_file(out_path, numrad::emit_report(report, fmt));
    std::cout << numrad::emit_report(report, numrad::ReportFormat::Text);
  }
  return report.total_failures() == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified numerical radius and block-matrix inequality checks"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one bound or all bounds on given operands");
  Operands eval_ops;
  ParamFlags eval_params;
  std::string eval_bound;
  double eval_tol = 1e-9;
  eval_ops.attach(eval);
  eval->add_option("--bound", eval_bound, "Bound id, comma list, or 'all'")->required();
  eval_params.attach(eval);
  eval->add_option("--tol", eval_tol, "Radius certification tolerance")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "Run a randomized validity suite");
  std::string suite_path;
  std::string check_out;
  std::string check_format = "json";
  int jobs = 1;
  check->add_option("--suite", suite_path, "Suite config JSON")->required();
  check->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  check->add_option("--out", check_out, "Write the report here instead of stdout");
  check->add_option("--format", check_format, "json, csv or text")->capture_default_str();

  // sharpness
  auto* sharp = app.add_subcommand("sharpness", "Run the equality configurations");
  std::string sharp_out;
  std::string sharp_format = "json";
  sharp->add_option("--out", sharp_out, "Write the report here instead of stdout");
  sharp->add_option("--format", sharp_format, "json, csv or text")->capture_default_str();

  // compare
  auto* compare = app.add_subcommand("compare", "Rank bounds by right-hand side");
  Operands cmp_ops;
  ParamFlags cmp_params;
  std::string cmp_bounds;
  double cmp_tol = 1e-9;
  cmp_ops.attach(compare);
  compare->add_option("--bounds", cmp_bounds, "Comma-separated bound ids")->required();
  cmp_params.attach(compare);
  compare->add_option("--tol", cmp_tol, "Radius certification tolerance")->capture_default_str();

  // radius
  auto* radius = app.add_subcommand("radius", "Numerical radius of one matrix");
  std::string radius_matrix;
  std::string method = "sweep";
  double radius_tol = 1e-10;
  int restarts = 64;
  std::uint64_t seed = 0;
  radius->add_option("--matrix", radius_matrix, "Matrix JSON file")->required();
  radius->add_option("--method", method, "sweep, ellipse or rayleigh")
      ->check(CLI::IsMember({"sweep", "ellipse", "rayleigh"}))
      ->capture_default_str();
  radius->add_option("--tol", radius_tol, "Sweep tolerance")->capture_default_str();
  radius->add_option("--restarts", restarts, "Rayleigh restarts")->capture_default_str();
  radius->add_option("--seed", seed, "Rayleigh seed")->capture_default_str();

  // list
  auto* list = app.add_subcommand("list", "Print the bound catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      const numrad::BlockMatrix2x2 blocks = eval_ops.load();
      const numrad::BoundParams params = eval_params.build();
      std::vector<numrad::BoundReport> reports;
      for (numrad::BoundId id : parse_id_list(eval_bound)) {
        reports.push_back(numrad::evaluate_bound(id, blocks, params, eval_tol));
      }
      std::cout << (reports.size() == 1 ? numrad::to_json(reports.front())
                                        : numrad::to_json(std::span(reports)))
                << '\n';
      for (const auto& r : reports) {
        if (!r.holds) return kExitInvalid;
      }
      return kExitOk;
    }
    if (*check) {
      numrad::SuiteConfig config = numrad::read_suite_config(suite_path);
      if (const char* env = std::getenv("NUMRAD_SEED"); env != nullptr && *env != '\0') {
        try {
          std::size_t used = 0;
          config.seed = std::stoull(env, &used, 0);
          if (env[used] != '\0') throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw numrad::Error(numrad::Errc::Parse,
                              std::string("NUMRAD_SEED must be an unsigned integer, got '") + env +
                                  "'");
        }
      }
      config.jobs = jobs;
      return finish_suite(numrad::run_suite(config), check_out, check_format);
    }
    if (*sharp) {
      return finish_suite(numrad::sharpness_suite(), sharp_out, sharp_format);
    }
    if (*compare) {
      const numrad::BlockMatrix2x2 blocks = cmp_ops.load();
      const numrad::BoundParams params = cmp_params.build();
      std::vector<numrad::BoundConfig> configs;
      for (numrad::BoundId id : parse_id_list(cmp_bounds)) configs.push_back({id, params});
      const auto ranking = numrad::compare_tightness(configs, blocks, cmp_tol);
      std::cout << numrad::to_json(std::span(ranking)) << '\n';
      return kExitOk;
    }
    if (*radius) {
      const numrad::ComplexMatrix m = numrad::read_matrix_file(radius_matrix);
      numrad::RadiusResult r;
      if (method == "ellipse") {
        r = numrad::nr_ellipse_2x2(m);
      } else if (method == "rayleigh") {
        r = numrad::nr_rayleigh(m, restarts, seed);
      } else {
        r = numrad::numerical_radius(m, radius_tol);
      }
      nlohmann::json out = {{"method", std::string(numrad::to_string(r.method))},
                            {"value", r.value},
                            {"argmax_theta", r.argmax_theta}};
      out["certified_tolerance"] =
          std::isfinite(r.certified_tolerance) ? nlohmann::json(r.certified_tolerance)
                                               : nlohmann::json("inf");
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }
    if (*list) {
      std::cout << numrad::catalog_json() << '\n';
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const numrad::Error& e) {
    std::cerr << "numrad: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
