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

#include "numrad/suite.hpp"

namespace numrad {

enum class ReportFormat { Json, Csv, Text };

/// Throws Parse for anything but json, csv, text.
ReportFormat report_format_from_string(std::string_view name);

/// Json keeps run-dependent values under the top-level "timestamp" key only, so two runs of
/// one config are byte-identical once that key is removed.
std::string emit_report(const SuiteReport& report, ReportFormat format);

/// Reads the json form back. Throws Parse.
SuiteReport suite_report_from_json(std::string_view text);

/// The config echo used inside the json report.
std::string suite_config_to_json(const SuiteConfig& config);

}  // namespace numrad
