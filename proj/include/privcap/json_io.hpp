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

// JSON interchange for matrices, ensembles, channels and optimizer results.

#include <string>

#include <json.hpp>

#include "privcap/channel.hpp"
#include "privcap/ensembles.hpp"
#include "privcap/optimizer.hpp"

namespace privcap {

using Json = nlohmann::ordered_json;

/// {"rows", "cols", "data": [[re, im], ...]} row-major; `kind` added when non-empty.
Json matrix_to_json(const CMatrix& m, const std::string& kind = "");
CMatrix matrix_from_json(const Json& j);

Json to_json(const PureState& s);
Json to_json(const DensityMatrix& rho);
Json to_json(const UnitaryMatrix& u);
PureState pure_state_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j);
UnitaryMatrix unitary_from_json(const Json& j);

/// Haar and Clifford ensembles are stored by (d, m, seed) and regenerated on
/// load; explicit ensembles carry their members (uniform weights).
Json to_json(const UnitaryEnsemble& e);
UnitaryEnsemble ensemble_from_json(const Json& j);

Json to_json(const FiniteVChannel& ch);
FiniteVChannel channel_from_json(const Json& j);

Json to_json(const RngSeed& s);
RngSeed seed_from_json(const Json& j);

Json to_json(const OptimizerResult& r);

}  // namespace privcap
