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

#include "numrad/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "numrad/error.hpp"

namespace numrad {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "numrad.suite/1";

// Non-finite doubles become strings; json has no literal for them.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error(Errc::Parse, "report json: expected a number");
}

json params_json(const BoundParams& p) {
  json o = json::object();
  if (p.gauge) o["gauge"] = to_string(*p.gauge);
  if (p.pair) o["pair"] = p.pair->alpha;
  if (p.alpha) o["alpha"] = *p.alpha;
  if (p.quad) o["quad"] = to_string(*p.quad);
  if (p.holder) o["p"] = p.holder->p;
  if (p.r) o["r"] = *p.r;
  if (p.n) o["n"] = *p.n;
  return o;
}

json config_json(const SuiteConfig& c) {
  json bounds = json::array();
  for (BoundId id : effective_bounds(c)) bounds.push_back(std::string(to_string(id)));
  json kinds = json::array();
  for (EnsembleKind k : effective_ensembles(c)) kinds.push_back(std::string(to_string(k)));
  json o = {{"bounds", std::move(bounds)},
            {"ensembles", std::move(kinds)},
            {"trials", c.trials},
            {"dims", {c.dim_min, c.dim_max}},
            {"seed", c.seed},
            {"tol", c.tol},
            {"pass_tol", c.pass_tol},
            {"gate_hypotheses", c.gate_hypotheses},
            {"constrain_operands", c.constrain_operands}};
  o["rescale"] = c.rescale ? json(*c.rescale) : json(nullptr);
  o["params"] = c.param_mode == ParamMode::Random ? json("random") : params_json(c.fixed_params);
  return o;
}

json tally_json(const BoundTally& t) {
  json o = {{"bound_id", t.label},     {"trials", t.trials},
            {"passes", t.passes},      {"failures", t.failures},
            {"skipped", t.skipped},    {"errors", t.errors},
            {"worst_slack", number(t.worst_slack)},
            {"worst_rel_slack", number(t.worst_rel_slack)},
            {"max_rel_tol", number(t.max_rel_tol)}};
  if (t.worst) {
    o["worst_instance"] = {{"seed", t.worst->seed},
                           {"trial", t.worst->trial},
                           {"ensemble", std::string(to_string(t.worst->kind))},
                           {"dim", t.worst->dim}};
  } else {
    o["worst_instance"] = nullptr;
  }
  return o;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(Errc::Parse, "unknown report format '" + std::string(name) +
                               "' (expected json, csv or text)");
}

std::string suite_config_to_json(const SuiteConfig& config) { return config_json(config).dump(2); }

std::string emit_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json bounds = json::array();
      for (const auto& t : report.tallies) bounds.push_back(tally_json(t));
      json doc = {{"schema", kSchema},
                  {"bounds", std::move(bounds)},
                  {"totals",
                   {{"trials", report.total_trials()},
                    {"failures", report.total_failures()},
                    {"skipped", report.total_skipped()}}},
                  {"timestamp",
                   {{"generated_at", report.generated_at}, {"wall_time_s", report.wall_time_s}}}};
      doc["config"] = report.config ? config_json(*report.config) : json(nullptr);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "bound_id,trials,passes,worst_slack,worst_seed\n";
      for (const auto& t : report.tallies) {
        os << t.label << ',' << t.trials << ',' << t.passes << ',' << csv_number(t.worst_slack)
           << ',';
        if (t.worst) os << t.worst->seed;
        os << '\n';
      }
      return os.str();
    }
    case ReportFormat::Text: {
      std::ostringstream os;
      os << std::left << std::setw(32) << "bound" << std::right << std::setw(8) << "trials"
         << std::setw(8) << "pass" << std::setw(8) << "fail" << std::setw(8) << "skip"
         << std::setw(16) << "worst rel slack" << '\n';
      for (const auto& t : report.tallies) {
        os << std::left << std::setw(32) << t.label << std::right << std::setw(8) << t.trials
           << std::setw(8) << t.passes << std::setw(8) << t.failures << std::setw(8) << t.skipped
           << std::setw(16) << std::setprecision(4) << std::scientific << t.worst_rel_slack
           << std::defaultfloat << '\n';
      }
      os << "total: " << report.total_trials() << " trials, " << report.total_failures()
         << " failures, " << report.total_skipped() << " skipped";
      os << std::fixed << std::setprecision(2) << ", " << report.wall_time_s << " s\n";
      return os.str();
    }
  }
  return {};
}

SuiteReport suite_report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("report json: ") + e.what());
  }
  SuiteReport report;
  try {
    if (!doc.is_object() || !doc.contains("bounds") || !doc["bounds"].is_array()) {
      throw Error(Errc::Parse, "report json: missing 'bounds' array");
    }
    for (const auto& b : doc["bounds"]) {
      BoundTally t;
      t.label = b.at("bound_id").get<std::string>();
      t.trials = b.at("trials").get<std::size_t>();
      t.passes = b.at("passes").get<std::size_t>();
      t.failures = b.at("failures").get<std::size_t>();
      t.skipped = b.at("skipped").get<std::size_t>();
      t.errors = b.at("errors").get<std::size_t>();
      t.worst_slack = read_number(b.at("worst_slack"));
      t.worst_rel_slack = read_number(b.at("worst_rel_slack"));
      t.max_rel_tol = read_number(b.at("max_rel_tol"));
      const json& w = b.at("worst_instance");
      if (!w.is_null()) {
        t.worst = InstanceDigest{w.at("seed").get<std::uint64_t>(), w.at("trial").get<std::size_t>(),
                                 ensemble_from_string(w.at("ensemble").get<std::string>()),
                                 w.at("dim").get<int>()};
      }
      report.tallies.push_back(std::move(t));
    }
    if (doc.contains("config") && !doc["config"].is_null()) {
      report.config = suite_config_from_json(doc["config"].dump());
    }
    if (doc.contains("timestamp")) {
      report.generated_at = doc["timestamp"].at("generated_at").get<std::string>();
      report.wall_time_s = doc["timestamp"].at("wall_time_s").get<double>();
    }
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("report json: ") + e.what());
  }
  return report;
}

}  // namespace numrad
