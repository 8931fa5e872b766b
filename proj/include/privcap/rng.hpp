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

#include <cstdint>
#include <random>

namespace privcap {

/// (seed, stream) fully determines every sample drawn from it. Trials,
/// restarts and ensemble members derive their own substreams, so the draw for
/// trial t does not depend on which thread evaluates it.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RngSeed substream(std::uint64_t k) const;
    std::mt19937_64 engine() const;

    friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Stable 64-bit key for naming experiment streams.
std::uint64_t stream_key(const char* name);

}  // namespace privcap
