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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "privcap/kernels.hpp"
#include "privcap/qlinalg.hpp"
#include "privcap/rng.hpp"

namespace privcap {

enum class EnsembleKind { HaarSample, CliffordExact, ExplicitList };

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& s);

struct WeightedUnitary {
    UnitaryMatrix unitary;
    double weight;
};

/// A finite weighted set of d x d unitaries standing in for the distribution of V.
class UnitaryEnsemble {
 public:
    /// Throws ParameterError on non-positive weights, weights not summing to 1
    /// (1e-12), or members of the wrong dimension.
    UnitaryEnsemble(std::size_t d, EnsembleKind kind, std::vector<WeightedUnitary> members,
                    RngSeed seed = {});

    /// Uniform weights unless `weights` is given.
    static UnitaryEnsemble explicit_list(std::vector<UnitaryMatrix> unitaries,
                                         std::vector<double> weights = {});

    std::size_t d() const { return d_; }
    EnsembleKind kind() const { return kind_; }
    const RngSeed& seed() const { return seed_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<WeightedUnitary>& members() const { return members_; }
    const WeightedUnitary& operator[](std::size_t i) const { return members_[i]; }

 private:
    std::size_t d_;
    EnsembleKind kind_;
    RngSeed seed_;
    std::vector<WeightedUnitary> members_;
};

/// Ginibre matrix -> Householder QR -> column phase fix. Deterministic in rng.
UnitaryMatrix haar_unitary(std::size_t d, const RngSeed& rng);
UnitaryMatrix haar_unitary(std::size_t d, std::mt19937_64& engine);
/// U|0> for Haar U.
PureState haar_state(std::size_t d, const RngSeed& rng);

/// m Haar members, member k drawn from seed.substream(k).
UnitaryEnsemble haar_ensemble(std::size_t d, std::size_t m, const RngSeed& seed);

/// Single-qudit Clifford group modulo global phase for d in {2, 3}, by
/// breadth-first closure over {Fourier, phase, X, Z}. Members are
/// canonicalized so the first nonzero entry (row-major) is positive real.
UnitaryEnsemble clifford_group(std::size_t d);

/// Rescales so the first entry (row-major) with magnitude > 1e-9 is positive real.
CMatrix canonicalize_phase(const CMatrix& u);

/// True iff U X U^dagger and U Z U^dagger are both proportional to a
/// generalized Pauli X^a Z^b.
bool normalizes_paulis(const UnitaryMatrix& u);

/// Generalized Pauli shift X|j> = |j+1 mod d>.
CMatrix shift_gate(std::size_t d);
/// Clock Z^a: diag(omega^{a j}), omega = exp(2 pi i / d). Negative a allowed.
CMatrix clock_gate(std::size_t d, long long a);

/// sum_{j,k} w_j w_k |Tr(U_j^dagger U_k)|^4. Equals 2 exactly for a 2-design.
double frame_potential(const UnitaryEnsemble& e, const ExecPolicy& exec = {});

CMatrix swap_operator(std::size_t d);
/// (Pi_sym, Pi_anti) = ((I + F)/2, (I - F)/2).
std::pair<CMatrix, CMatrix> sym_antisym_projectors(std::size_t d);

/// Weighted average of (U^dagger ⊗ U^dagger) m (U ⊗ U).
CMatrix second_moment_twirl(const CMatrix& m, const UnitaryEnsemble& e,
                            const ExecPolicy& exec = {});
/// What any exact 2-design twirl must return:
/// Tr[Pi_sym m] Pi_sym / d_sym + Tr[Pi_anti m] Pi_anti / d_anti.
CMatrix twirl_closed_form(const CMatrix& m, std::size_t d);
/// Streaming Haar estimate of the twirl; trial t uses seed.substream(t).
CMatrix haar_twirl_monte_carlo(const CMatrix& m, std::size_t d, std::size_t trials,
                               const RngSeed& seed, const ExecPolicy& exec = {});

/// Twirl of Z^a ⊗ Z^{-a}: identity for a = 0 mod d, else
/// Pi_sym/(d+1) - Pi_anti/(d-1).
CMatrix s_operator(long long a, std::size_t d);

}  // namespace privcap
