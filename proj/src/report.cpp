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

#include "privcap/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "privcap/errors.hpp"

namespace privcap {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string param_to_json(const ParamValue& v) {
    if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return quoted(std::get<std::string>(v));
}

std::string params_to_json(const ExperimentReport& r) {
    std::string out = "{";
    for (const auto& [key, value] : r.params) {
        out += quoted(key) + ":" + param_to_json(value) + ",";
    }
    out += "\"tol_abs\":" + format_double(r.tol_abs);
    out += ",\"tol_sigma\":" + format_double(r.tol_sigma) + "}";
    return out;
}

std::string seed_to_json(const RngSeed& s) {
    return "[" + std::to_string(s.seed) + "," + std::to_string(s.stream) + "]";
}

}  // namespace

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw ParameterError("unknown report format: " + s);
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string report_to_json(const ExperimentReport& r) {
    std::string out = "{";
    out += "\"name\":" + quoted(r.name);
    out += ",\"params\":" + params_to_json(r);
    out += ",\"estimate\":" + format_double(r.estimate);
    out += ",\"std_error\":" + format_double(r.std_error);
    out += ",\"bound\":" + format_double(r.bound);
    out += ",\"comparison\":" + quoted(to_string(r.comparison));
    out += std::string(",\"pass\":") + (r.pass ? "true" : "false");
    out += ",\"status\":" + quoted(to_string(r.status));
    out += ",\"seed\":" + seed_to_json(r.seed);
    out += ",\"wall_ms\":" + std::to_string(r.wall_ms);
    out += "}";
    return out;
}

std::string reports_to_json(const std::vector<ExperimentReport>& reports) {
    if (reports.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += report_to_json(reports[i]);
        out += i + 1 < reports.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string reports_to_csv(const std::vector<ExperimentReport>& reports) {
    std::string out =
        "name,params,estimate,std_error,bound,comparison,pass,status,seed,wall_ms\n";
    for (const auto& r : reports) {
        out += csv_field(r.name) + ",";
        out += csv_field(params_to_json(r)) + ",";
        out += csv_field(format_double(r.estimate)) + ",";
        out += csv_field(format_double(r.std_error)) + ",";
        out += csv_field(format_double(r.bound)) + ",";
        out += csv_field(to_string(r.comparison)) + ",";
        out += std::string(r.pass ? "true" : "false") + ",";
        out += csv_field(to_string(r.status)) + ",";
        out += csv_field(seed_to_json(r.seed)) + ",";
        out += std::to_string(r.wall_ms) + "\n";
    }
    return out;
}

}  // namespace privcap
