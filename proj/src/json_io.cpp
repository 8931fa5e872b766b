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

#include "privcap/json_io.hpp"

#include "privcap/errors.hpp"

namespace privcap {

namespace {

void require_kind(const Json& j, const char* kind) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind) {
        throw ParameterError(std::string("expected matrix kind ") + kind);
    }
}

}  // namespace

Json matrix_to_json(const CMatrix& m, const std::string& kind) {
    Json j;
    if (!kind.empty()) j["kind"] = kind;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
    }
    j["data"] = std::move(data);
    return j;
}

CMatrix matrix_from_json(const Json& j) {
    try {
        const auto rows = j.at("rows").get<Eigen::Index>();
        const auto cols = j.at("cols").get<Eigen::Index>();
        if (rows < 0 || cols < 0) throw DimensionError("matrix JSON: negative dimension");
        check_dimension(static_cast<std::size_t>(std::max(rows, cols)), "matrix JSON");
        const auto& data = j.at("data");
        if (data.size() != static_cast<std::size_t>(rows * cols)) {
            throw DimensionError("matrix JSON: data length does not match rows * cols");
        }
        CMatrix m(rows, cols);
        std::size_t k = 0;
        for (Eigen::Index r = 0; r < rows; ++r) {
            for (Eigen::Index c = 0; c < cols; ++c, ++k) {
                const auto& e = data.at(k);
                if (e.size() != 2) throw ParameterError("matrix JSON: entries must be [re, im]");
                m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("matrix JSON: ") + e.what());
    }
}

Json to_json(const PureState& s) { return matrix_to_json(s.amplitudes(), "pure"); }
Json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix(), "density"); }
Json to_json(const UnitaryMatrix& u) { return matrix_to_json(u.matrix(), "unitary"); }

PureState pure_state_from_json(const Json& j) {
    require_kind(j, "pure");
    CMatrix m = matrix_from_json(j);
    if (m.cols() != 1) throw DimensionError("pure state JSON must have one column");
    return PureState(CVector(m.col(0)));
}

DensityMatrix density_from_json(const Json& j) {
    require_kind(j, "density");
    return DensityMatrix(matrix_from_json(j));
}

UnitaryMatrix unitary_from_json(const Json& j) {
    require_kind(j, "unitary");
    return UnitaryMatrix(matrix_from_json(j));
}

Json to_json(const RngSeed& s) { return Json::array({s.seed, s.stream}); }

RngSeed seed_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParameterError("seed JSON must be [seed, stream]");
    return {j.at(0).get<std::uint64_t>(), j.at(1).get<std::uint64_t>()};
}

Json to_json(const UnitaryEnsemble& e) {
    Json j;
    j["d"] = e.d();
    j["kind"] = to_string(e.kind());
    j["m"] = e.size();
    j["seed"] = to_json(e.seed());
    if (e.kind() == EnsembleKind::ExplicitList) {
        Json members = Json::array();
        for (const auto& m : e.members()) members.push_back(to_json(m.unitary));
        j["members"] = std::move(members);
    }
    return j;
}

UnitaryEnsemble ensemble_from_json(const Json& j) {
    try {
        const auto d = j.at("d").get<std::size_t>();
        const EnsembleKind kind = ensemble_kind_from_string(j.at("kind").get<std::string>());
        const auto m = j.at("m").get<std::size_t>();
        const RngSeed seed = j.contains("seed") ? seed_from_json(j.at("seed")) : RngSeed{};
        switch (kind) {
            case EnsembleKind::HaarSample: return haar_ensemble(d, m, seed);
            case EnsembleKind::CliffordExact: {
                UnitaryEnsemble e = clifford_group(d);
                if (e.size() != m) throw ParameterError("ensemble JSON: wrong Clifford group order");
                return e;
            }
            case EnsembleKind::ExplicitList: {
                std::vector<UnitaryMatrix> us;
                for (const auto& mj : j.at("members")) us.push_back(unitary_from_json(mj));
                if (us.size() != m) throw ParameterError("ensemble JSON: m does not match members");
                for (const auto& u : us) {
                    if (u.dim() != d) throw DimensionError("ensemble JSON: member has wrong dimension");
                }
                return UnitaryEnsemble::explicit_list(std::move(us));
            }
        }
        throw ParameterError("ensemble JSON: unknown kind");
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("ensemble JSON: ") + e.what());
    }
}

Json to_json(const FiniteVChannel& ch) {
    Json j;
    j["d"] = ch.d();
    j["ensemble"] = to_json(ch.ensemble());
    return j;
}

FiniteVChannel channel_from_json(const Json& j) {
    try {
        UnitaryEnsemble e = ensemble_from_json(j.at("ensemble"));
        if (j.at("d").get<std::size_t>() != e.d()) {
            throw DimensionError("channel JSON: d does not match the ensemble");
        }
        return FiniteVChannel(std::move(e));
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("channel JSON: ") + e.what());
    }
}

Json to_json(const OptimizerResult& r) {
    Json j;
    j["value_bits"] = r.bound.value;
    j["kind"] = to_string(r.bound.kind);
    j["restarts"] = r.restarts.size();
    j["seed"] = to_json(r.seed);
    Json input;
    input["p"] = r.input.p();
    Json shields = Json::array();
    for (const auto& s : r.input.shields()) shields.push_back(to_json(s));
    input["shields"] = std::move(shields);
    j["input"] = std::move(input);
    Json iterations = Json::array();
    for (const auto& t : r.restarts) {
        Json it;
        it["iterations"] = t.iterations;
        it["value_bits"] = t.value;
        it["converged"] = t.converged;
        iterations.push_back(std::move(it));
    }
    j["iterations"] = std::move(iterations);
    j["best_restart"] = r.best_restart;
    j["budget_exhausted"] = r.budget_exhausted;
    j["provenance"] = r.bound.provenance;
    return j;
}

}  // namespace privcap
