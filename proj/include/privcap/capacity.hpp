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
#include <string>
#include <vector>

#include "privcap/channel.hpp"
#include "privcap/kernels.hpp"
#include "privcap/qlinalg.hpp"

namespace privcap {

struct StateEnsembleMember {
    double probability;
    DensityMatrix state;
};

/// {p_i, φ_i}: probabilities positive and summing to 1 within 1e-12.
class StateEnsemble {
 public:
    explicit StateEnsemble(std::vector<StateEnsembleMember> members);
    const std::vector<StateEnsembleMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

 private:
    std::vector<StateEnsembleMember> members_;
};

/// sum_x p_x |x><x| ⊗ |φ^x><φ^x| on A1^n ⊗ A2^n.
///
/// One shield per basis string; shields of strings with p_x = 0 are carried
/// but never influence any quantity.
class StandardFormInput {
 public:
    StandardFormInput(std::size_t d, std::size_t n, std::vector<double> p,
                      std::vector<PureState> shields);

    /// Uniform p over strings, every shield |0...0>. The n = 1 case is (I/d) ⊗ |0><0|.
    static StandardFormInput uniform_computational(std::size_t d, std::size_t n);

    std::size_t d() const { return d_; }
    std::size_t n() const { return n_; }
    std::size_t strings() const { return p_.size(); }
    const std::vector<double>& p() const { return p_; }
    const std::vector<PureState>& shields() const { return shields_; }

 private:
    std::size_t d_, n_;
    std::vector<double> p_;
    std::vector<PureState> shields_;
};

enum class BoundKind { LowerCertificate, UpperClosedForm, Exact };
std::string to_string(BoundKind kind);

struct BoundValue {
    double value = 0.0;
    BoundKind kind = BoundKind::Exact;
    std::string provenance;
};

// ---------------------------------------------------------------------------
// Information quantities (bits)

/// sum_V w_V [S(B_V) - S(E_V)]. The H(w) terms of the V registers cancel.
double coherent_information(const FiniteVChannel& ch, const DensityMatrix& rho,
                            const ExecPolicy& exec = {});
/// Per-member values S(B_V) - S(E_V), in ensemble order.
std::vector<double> coherent_information_terms(const FiniteVChannel& ch, const DensityMatrix& rho,
                                               const ExecPolicy& exec = {});
/// S(N(ρ)) - S(N̂(ρ)) for an arbitrary channel with complement.
double coherent_information(const ComplementaryPair& n, const DensityMatrix& rho);
/// n-use coherent information over member tuples (iterated block evaluation).
double coherent_information_multi(const FiniteVChannel& ch, const DensityMatrix& rho,
                                  std::size_t n);
/// Standard-form inputs only: H(p) - sum_V w_V S(sum_x p_x Z^x V|φ^x><φ^x|V^dagger Z^-x).
double standard_form_coherent_information(const FiniteVChannel& ch, const StandardFormInput& s);

/// S(sum p_i ρ_i) - sum p_i S(ρ_i).
double holevo_chi(const std::vector<double>& p, const std::vector<DensityMatrix>& outputs);
/// Holevo quantity for outputs sharing one classical register with identical weights.
double holevo_chi(const std::vector<double>& p, const std::vector<CQState>& outputs);

/// χ(N_d, E) - χ(N̂_d, E) with the V registers folded in.
double private_information(const FiniteVChannel& ch, const StateEnsemble& e,
                           const ExecPolicy& exec = {});
/// p_i = 1/d, φ_i = |i><i| ⊗ I/d.
StateEnsemble achievability_ensemble(std::size_t d);

DensityMatrix standard_form_input(const StandardFormInput& s);

// ---------------------------------------------------------------------------
// Closed forms

/// ½(log2 d_A + q1).
double privacy_upper_bound(std::size_t d_A, double q1);
/// ½[S(ρ) + S(N(ρ)) - S(N̂(ρ))], the flagged-channel coherent information.
double half_objective(const ComplementaryPair& n, const DensityMatrix& rho);

double harmonic_number(std::size_t d);
/// (log2 e)(H_d - 1): Haar average of S(dephase(|φ><φ|)) in bits.
double avg_dephased_entropy_closed_form(std::size_t d);
/// log2 d - (log2 e)(H_d - 1): coherent information of (I/d) ⊗ |0><0| under Haar V.
double closed_form_lower_bound(std::size_t d);
/// (1 - γ) log2 e, the d -> ∞ limit of closed_form_lower_bound.
double asymptotic_rate_constant();

}  // namespace privcap
