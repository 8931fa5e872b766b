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
#include <optional>
#include <vector>

#include "privcap/capacity.hpp"
#include "privcap/rng.hpp"

namespace privcap {

struct OptimizerOptions {
    std::size_t restarts = 20;
    std::size_t n = 1;
    std::size_t max_iterations = 2000;
    double fd_step = 1e-5;
    double rel_tol = 1e-9;
    /// Replaces the random start of restart 0. Strings with p_x = 0 stay
    /// at zero and their shields are dropped from the search.
    std::optional<StandardFormInput> initial;
};

struct RestartTrace {
    std::size_t iterations = 0;
    double value = 0.0;
    bool converged = false;
};

struct OptimizerResult {
    /// Best value found; always a lower certificate, never a claim of optimality.
    BoundValue bound;
    StandardFormInput input;
    std::size_t best_restart = 0;
    std::vector<RestartTrace> restarts;
    /// Some restart hit max_iterations before converging.
    bool budget_exhausted = false;
    RngSeed seed;
};

/// Multi-start gradient ascent of coherent information over standard-form
/// inputs: p = softmax(θ) over the active strings, shields re-projected to
/// the unit sphere after each step. Gradients by central differences;
/// Barzilai-Borwein trial step with Armijo backtracking. Restart r draws its
/// starting point from seed.substream(r). Ties go to the lowest restart.
OptimizerResult optimize_coherent_info(const FiniteVChannel& ch, const RngSeed& seed,
                                       const OptimizerOptions& options = {},
                                       const ExecPolicy& exec = {});

}  // namespace privcap
