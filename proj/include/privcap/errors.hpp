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

#include <stdexcept>
#include <string>

namespace privcap {

/// Operand shapes do not fit together (tensor factors, partial-trace dims, map composition).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A scalar parameter is outside its supported range (d < 2, unsupported prime, digit out of range).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix claimed to be a state/unitary fails validation.
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A constructed matrix would exceed the global dimension cap.
struct CapExceededError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace privcap
