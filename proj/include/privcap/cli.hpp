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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace privcap {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string command;
    std::size_t d = 2;
    std::size_t n = 1;
    std::optional<std::size_t> trials;
    std::size_t restarts = 20;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::optional<std::string> out;
    int threads = 1;
    std::optional<double> tol_abs;
    double tol_sigma = 3.0;
};

/// Parses argv. Returns the exit code on --help (0) or a usage error (2).
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg,
                              std::ostream& out, std::ostream& err);

/// 0 if every report passes, 1 if any fails, 2 on usage or I/O errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace privcap
