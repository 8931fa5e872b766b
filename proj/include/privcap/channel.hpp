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
#include <functional>
#include <memory>
#include <vector>

#include "privcap/ensembles.hpp"
#include "privcap/kernels.hpp"
#include "privcap/qlinalg.hpp"

namespace privcap {

/// A linear map on operators, in_dim x in_dim -> out_dim x out_dim.
/// Applied to arbitrary operators (matrix units for Choi matrices), not
/// only to states.
struct ChannelMap {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::function<CMatrix(const CMatrix&)> fn;

    CMatrix operator()(const CMatrix& x) const;
    DensityMatrix operator()(const DensityMatrix& rho) const;
};

/// A channel together with its complementary channel.
struct ComplementaryPair {
    ChannelMap channel;
    ChannelMap complement;
};

/// l ∘ m (m acts first). Throws DimensionError unless m.out_dim == l.in_dim.
ChannelMap compose(const ChannelMap& l, const ChannelMap& m);

/// (map ⊗ id)(|Φ><Φ|) with |Φ> maximally entangled on in_dim^2. The map acts
/// on the first factor.
CMatrix choi(const ChannelMap& map);
/// Trace distance between Choi matrices; equality means <= 1e-9.
double choi_distance(const ChannelMap& a, const ChannelMap& b);

ChannelMap identity_map(std::size_t dim);
/// Identity channel with a trivial (1-dimensional) environment.
ComplementaryPair identity_pair(std::size_t dim);
/// Completely dephasing channel, Stinespring |j> -> |j>_B |j>_E.
ComplementaryPair dephasing_pair(std::size_t dim);
/// Completely dephasing map on one tensor factor of a multipartite input.
ChannelMap dephasing_on_factor(const Dims& dims, std::size_t target);
/// Tr_E / Tr_B of an isometry U: A -> B ⊗ E.
ComplementaryPair from_isometry(const CMatrix& u, std::size_t b_dim, std::size_t e_dim);

// ---------------------------------------------------------------------------
// Gates

/// P = sum_{i,j} omega^{ij} |i><i| ⊗ |j><j| on d^2 dims.
UnitaryMatrix controlled_phase(std::size_t d);
/// Z^x = Z_{x_1} ⊗ ... ⊗ Z_{x_n}, diagonal with entries omega^{sum x_i j_i}.
UnitaryMatrix z_string(const std::vector<std::size_t>& x, std::size_t d);

// ---------------------------------------------------------------------------
// Classical-quantum outputs

struct CQBlock {
    double weight;
    DensityMatrix rho;
};

/// Block-diagonal state over a classical register.
class CQState {
 public:
    /// Throws unless weights are positive and sum to 1 (1e-12) and all blocks share a dimension.
    explicit CQState(std::vector<CQBlock> blocks);
    CQState(std::vector<CQBlock> blocks, trusted_t) : blocks_(std::move(blocks)) {}

    const std::vector<CQBlock>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    std::size_t dim() const { return blocks_.empty() ? 0 : blocks_.front().rho.dim(); }

    /// sum_v w_v S(rho_v).
    double conditional_entropy() const;
    /// sum_v w_v Tr rho_v.
    double total_trace() const;
    /// sum_v w_v rho_v ⊗ |v><v|, system index major.
    CMatrix to_matrix() const;

 private:
    std::vector<CQBlock> blocks_;
};

/// Isometry U: A -> B ⊗ E ⊗ V_B ⊗ V_E (factor order as listed).
class StinespringIsometry {
 public:
    StinespringIsometry(CMatrix u, std::size_t in_dim, std::size_t b_dim, std::size_t e_dim,
                        std::size_t classical_count);

    const CMatrix& matrix() const { return u_; }
    std::size_t in_dim() const { return in_dim_; }
    std::size_t b_dim() const { return b_dim_; }
    std::size_t e_dim() const { return e_dim_; }
    std::size_t classical_count() const { return classical_; }

    /// Receiver side keeps (B, V_B); environment keeps (E, V_E).
    ComplementaryPair pair() const;

 private:
    CMatrix u_;
    std::size_t in_dim_, b_dim_, e_dim_, classical_;
};

/// The channel N_d = E_V N_V ⊗ |V><V| over a finite unitary ensemble.
/// Input registers (A1, A2), each of dimension d; W_V = P (I ⊗ V);
/// B = A1 after W_V, E = A2 after W_V.
class FiniteVChannel {
 public:
    explicit FiniteVChannel(UnitaryEnsemble ensemble);

    std::size_t d() const { return d_; }
    std::size_t input_dim() const { return d_ * d_; }
    const UnitaryEnsemble& ensemble() const { return ensemble_; }

    /// W_V for ensemble member `member`.
    CMatrix isometry_for(std::size_t member) const;

    CQState apply(const DensityMatrix& rho, const ExecPolicy& exec = {}) const;
    CQState apply_complement(const DensityMatrix& rho, const ExecPolicy& exec = {}) const;
    /// (apply, apply_complement) from a single conjugation per member.
    std::pair<CQState, CQState> apply_both(const DensityMatrix& rho,
                                           const ExecPolicy& exec = {}) const;

    /// n uses with i.i.d. members. Input on A1^n ⊗ A2^n. Visits every member
    /// tuple in lexicographic order with (weight, B^n block, E^n block); only
    /// one block pair is alive at a time.
    void for_each_multi_use_block(
        const DensityMatrix& rho, std::size_t n,
        const std::function<void(double, const CMatrix&, const CMatrix&)>& visit) const;

    /// U_d|psi> = sum_V sqrt(pr V) (W_V|psi>) ⊗ |V> ⊗ |V>. Subject to the dimension cap.
    StinespringIsometry isometry() const;

    /// Generic-map view with the V register folded in as a block-diagonal
    /// classical factor (output dims d * |ensemble| on both sides).
    ComplementaryPair as_pair() const;

 private:
    std::pair<CMatrix, CMatrix> member_blocks(const CMatrix& rho, std::size_t member) const;

    std::size_t d_;
    UnitaryEnsemble ensemble_;
    Eigen::VectorXcd phases_;
};

// ---------------------------------------------------------------------------
// Flagged extension

/// M(ρ) = ½[ρ ⊗ |0><0| + N(ρ) ⊗ |1><1|] and its complement
/// M̂(ρ) = ½[|e><e| ⊗ |0><0| + N̂(ρ) ⊗ |1><1|].
///
/// The M register has dimension max(d_A, d_B), the flag is the last factor.
/// The M̂ register is E ⊕ span{|e>}, with |e> the last basis vector.
struct FlaggedChannel {
    ComplementaryPair maps;
    std::size_t register_dim = 0;
    std::size_t erasure_index = 0;
};

FlaggedChannel flagged_channel(const ComplementaryPair& n);

/// Flips the flag, then applies N̂ (flag now 1) or resets to |e><e| (flag now 0).
/// Satisfies D ∘ M = M̂.
ChannelMap degrading_map(const ComplementaryPair& n);

/// L = N ⊗ Π_0 + I ⊗ Π_1, so that N = L ∘ M.
ChannelMap flag_recombiner(const ComplementaryPair& n);

}  // namespace privcap
