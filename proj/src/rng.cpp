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

#include "privcap/rng.hpp"

namespace privcap {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngSeed RngSeed::substream(std::uint64_t k) const {
    return RngSeed{seed, splitmix64(stream ^ splitmix64(k + 0x632be59bd9b4e019ULL))};
}

std::mt19937_64 RngSeed::engine() const {
    std::uint64_t key = splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32),
                      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

std::uint64_t stream_key(const char* name) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char* p = name; *p != '\0'; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace privcap
