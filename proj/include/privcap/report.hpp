// Copyright 2026 The privcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "privcap/lemma_bench.hpp"

namespace privcap {

enum class ReportFormat { Json, Csv };
ReportFormat report_format_from_string(const std::string& s);

/// Renders a double with 17 significant digits; NaN and infinities become null.
std::string format_double(double v);

/// One report as a single-line JSON object with keys in fixed order.
std::string report_to_json(const ExperimentReport& r);
/// "[]" for no reports, otherwise one record per line. Newline-terminated.
std::string reports_to_json(const std::vector<ExperimentReport>& reports);
/// Header plus one row per report. Fields are quoted when they contain a
/// comma, quote or line break.
std::string reports_to_csv(const std::vector<ExperimentReport>& reports);

std::string csv_field(const std::string& s);

}  // namespace privcap
