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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "privcap/channel.hpp"

using namespace privcap;

namespace {

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

UnitaryEnsemble small_haar_list(std::size_t d, std::size_t m, std::uint64_t seed) {
    std::vector<UnitaryMatrix> us;
    for (std::size_t k = 0; k < m; ++k) us.push_back(haar_unitary(d, RngSeed{seed, k}));
    return UnitaryEnsemble::explicit_list(std::move(us));
}

// Qubit amplitude damping, isometry |0> -> |0>|0>, |1> -> sqrt(1-g)|1>|0> + sqrt(g)|0>|1>.
ComplementaryPair amplitude_damping(double g) {
    CMatrix u = CMatrix::Zero(4, 2);
    u(0, 0) = 1.0;
    u(2, 1) = std::sqrt(1.0 - g);
    u(1, 1) = std::sqrt(g);
    return from_isometry(u, 2, 2);
}

double min_eigenvalue(const CMatrix& h) {
    double m = 1e300;
    for (double l : oracle::eigenvalues(h)) m = std::min(m, l);
    return m;
}

}  // namespace

TEST(Maps, DimensionChecks) {
    const ChannelMap id = identity_map(3);
    EXPECT_THROW(id(CMatrix(CMatrix::Identity(2, 2))), DimensionError);
    EXPECT_THROW(compose(identity_map(2), identity_map(3)), DimensionError);
    EXPECT_THROW(choi_distance(identity_map(2), identity_map(3)), DimensionError);
    EXPECT_THROW(from_isometry(CMatrix::Identity(3, 2), 2, 2), DimensionError);
    EXPECT_THROW(from_isometry(CMatrix::Ones(4, 2), 2, 2), InvalidStateError);
}

TEST(Maps, ChoiOfIdentityIsMaximallyEntangled) {
    for (std::size_t d : {2u, 3u}) {
        oracle::Vec phi = oracle::Vec::Zero(d * d);
        for (std::size_t i = 0; i < d; ++i) phi[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
        EXPECT_LT(max_diff(choi(identity_map(d)), phi * phi.adjoint()), 1e-15);
        EXPECT_NEAR(choi_distance(identity_map(d), identity_map(d)), 0.0, 1e-15);
    }
    // Fully dephasing vs identity on a qubit: Choi trace distance 1/2.
    EXPECT_NEAR(choi_distance(identity_map(2), dephasing_pair(2).channel), 0.5, 1e-12);
}

TEST(Maps, DephasingPairAndFactor) {
    std::mt19937_64 rng(1);
    const CMatrix rho = oracle::random_density(3, rng);
    const auto pair = dephasing_pair(3);
    const CMatrix b = pair.channel(rho);
    const CMatrix e = pair.complement(rho);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            const Complex want = i == j ? rho(i, i) : Complex(0.0, 0.0);
            EXPECT_LT(std::abs(b(i, j) - want), 1e-15);
            EXPECT_LT(std::abs(e(i, j) - want), 1e-15);
        }
    }
    const CMatrix big = oracle::random_density(6, rng);
    EXPECT_LT(max_diff(dephasing_on_factor({2, 3}, 1)(big), dephase(big, {2, 3}, 1)), 1e-15);
}

TEST(Maps, IdentityPairComplementIsTrace) {
    std::mt19937_64 rng(2);
    const CMatrix rho = oracle::random_density(4, rng);
    const auto p = identity_pair(4);
    EXPECT_LT(max_diff(p.channel(rho), rho), 1e-15);
    EXPECT_NEAR(p.complement(rho)(0, 0).real(), 1.0, 1e-14);
}

TEST(Gates, ControlledPhaseAndZString) {
    for (std::size_t d : {2u, 3u, 4u}) {
        EXPECT_LT(max_diff(controlled_phase(d).matrix(), oracle::controlled_phase(d)), 1e-14);
    }
    const oracle::Mat want = oracle::kron(oracle::clock(3, 2), oracle::clock(3, 1));
    EXPECT_LT(max_diff(z_string({2, 1}, 3).matrix(), want), 1e-14);
    EXPECT_THROW(z_string({3}, 3), ParameterError);
    EXPECT_THROW(z_string({}, 3), ParameterError);
}

TEST(CQ, ValidationAndMatrix) {
    const DensityMatrix a = DensityMatrix::basis(2, 0);
    const DensityMatrix b = DensityMatrix::maximally_mixed(2);
    EXPECT_THROW(CQState({{0.5, a}, {0.6, b}}), ParameterError);
    EXPECT_THROW(CQState({{1.0, a}, {0.0, b}}), ParameterError);
    EXPECT_THROW(CQState({{0.5, a}, {0.5, DensityMatrix::basis(3, 0)}}), DimensionError);
    const CQState s({{0.25, a}, {0.75, b}});
    EXPECT_NEAR(s.conditional_entropy(), 0.75, 1e-12);
    EXPECT_NEAR(s.total_trace(), 1.0, 1e-15);
    const CMatrix m = s.to_matrix();
    // Index r * 2 + v: block v = 1 at rows {1, 3}.
    EXPECT_NEAR(m(0, 0).real(), 0.25, 1e-15);
    EXPECT_NEAR(m(1, 1).real(), 0.375, 1e-15);
    EXPECT_NEAR(m(3, 3).real(), 0.375, 1e-15);
    EXPECT_NEAR(oracle::entropy(m), 0.75 + oracle::shannon({0.25, 0.75}), 1e-10);
}

TEST(FiniteV, MemberOutputsMatchMaterializedIsometry) {
    std::mt19937_64 rng(3);
    for (std::size_t d : {2u, 3u}) {
        const UnitaryEnsemble ens = small_haar_list(d, 3, 10 + d);
        const FiniteVChannel ch(ens);
        const CMatrix rho = oracle::random_density(d * d, rng);
        auto [bs, es] = ch.apply_both(DensityMatrix(rho));
        ASSERT_EQ(bs.size(), 3u);
        for (std::size_t v = 0; v < 3; ++v) {
            const auto want = oracle::nd_outputs(rho, ens[v].unitary.matrix(), d);
            EXPECT_LT(max_diff(bs.blocks()[v].rho.matrix(), want.b), 1e-13);
            EXPECT_LT(max_diff(es.blocks()[v].rho.matrix(), want.e), 1e-13);
            EXPECT_NEAR(bs.blocks()[v].weight, 1.0 / 3.0, 1e-15);
            const oracle::Mat w = oracle::controlled_phase(d) *
                                  oracle::kron(oracle::Mat::Identity(d, d), ens[v].unitary.matrix());
            EXPECT_LT(max_diff(ch.isometry_for(v), w), 1e-14);
        }
        EXPECT_LT(max_diff(ch.apply(DensityMatrix(rho)).to_matrix(), bs.to_matrix()), 1e-15);
    }
}

TEST(FiniteV, ParallelApplyIsIdentical) {
    std::mt19937_64 rng(4);
    const FiniteVChannel ch(haar_ensemble(3, 50, RngSeed{1, 1}));
    const DensityMatrix rho(oracle::random_density(9, rng));
    const CMatrix serial = ch.apply_complement(rho).to_matrix();
    const CMatrix par = ch.apply_complement(rho, ExecPolicy{4}).to_matrix();
    EXPECT_TRUE(serial == par);
}

TEST(FiniteV, StinespringIsometryReproducesBothSides) {
    std::mt19937_64 rng(5);
    const FiniteVChannel ch(small_haar_list(2, 3, 77));
    const StinespringIsometry iso = ch.isometry();
    const CMatrix& u = iso.matrix();
    EXPECT_LT(max_diff(u.adjoint() * u, CMatrix::Identity(4, 4)), 1e-12);
    const CMatrix rho = oracle::random_density(4, rng);
    const auto pair = iso.pair();
    EXPECT_LT(max_diff(pair.channel(rho), ch.apply(DensityMatrix(rho)).to_matrix()), 1e-13);
    EXPECT_LT(max_diff(pair.complement(rho), ch.apply_complement(DensityMatrix(rho)).to_matrix()), 1e-13);
    // Folded generic view agrees with the isometry.
    const auto folded = ch.as_pair();
    EXPECT_LT(max_diff(folded.channel(rho), pair.channel(rho)), 1e-13);
    EXPECT_LT(max_diff(folded.complement(rho), pair.complement(rho)), 1e-13);
}

TEST(FiniteV, IsometryRespectsCap) {
    const std::size_t old = dimension_cap();
    set_dimension_cap(64);
    const FiniteVChannel ch(clifford_group(2));  // 4 * 24 * 24 rows
    EXPECT_THROW(ch.isometry(), CapExceededError);
    set_dimension_cap(old);
}

TEST(FiniteV, TwoUseBlocksMatchTensoredIsometries) {
    std::mt19937_64 rng(6);
    const std::size_t d = 2;
    const UnitaryEnsemble ens = small_haar_list(d, 2, 99);
    const FiniteVChannel ch(ens);
    const CMatrix rho = oracle::random_density(16, rng);  // A1 A1' A2 A2'
    const oracle::Mat q = oracle::permutation({2, 2, 2, 2}, {0, 2, 1, 3});
    std::vector<std::pair<CMatrix, CMatrix>> got;
    std::vector<double> weights;
    ch.for_each_multi_use_block(DensityMatrix(rho), 2, [&](double w, const CMatrix& b, const CMatrix& e) {
        weights.push_back(w);
        got.emplace_back(b, e);
    });
    ASSERT_EQ(got.size(), 4u);
    std::size_t t = 0;
    for (std::size_t v1 = 0; v1 < 2; ++v1) {
        for (std::size_t v2 = 0; v2 < 2; ++v2, ++t) {
            const oracle::Mat w = oracle::kron(ch.isometry_for(v1), ch.isometry_for(v2));
            const oracle::Mat out = w * q * rho * q.adjoint() * w.adjoint();
            EXPECT_LT(max_diff(got[t].first, oracle::ptrace(out, {2, 2, 2, 2}, {0, 2})), 1e-13);
            EXPECT_LT(max_diff(got[t].second, oracle::ptrace(out, {2, 2, 2, 2}, {1, 3})), 1e-13);
            EXPECT_NEAR(weights[t], 0.25, 1e-15);
        }
    }
    EXPECT_THROW(ch.for_each_multi_use_block(DensityMatrix(rho), 1, [](double, const CMatrix&, const CMatrix&) {}),
                 DimensionError);
}

TEST(Flagged, OutputsAreStatesAndRecombine) {
    std::mt19937_64 rng(7);
    const std::vector<std::pair<std::string, ComplementaryPair>> channels{
        {"identity", identity_pair(2)},
        {"dephasing", dephasing_pair(3)},
        {"damping", amplitude_damping(0.3)},
        {"N_2", FiniteVChannel(small_haar_list(2, 4, 5)).as_pair()}};
    for (const auto& [name, n] : channels) {
        const FlaggedChannel fc = flagged_channel(n);
        const CMatrix rho = oracle::random_density(n.channel.in_dim, rng);
        const CMatrix m = fc.maps.channel(rho);
        const CMatrix mh = fc.maps.complement(rho);
        EXPECT_NEAR(m.trace().real(), 1.0, 1e-12) << name;
        EXPECT_NEAR(mh.trace().real(), 1.0, 1e-12) << name;
        EXPECT_GT(min_eigenvalue(m), -1e-12) << name;
        EXPECT_GT(min_eigenvalue(mh), -1e-12) << name;
        // Flag-0 half of M̂ is the erasure symbol with weight 1/2.
        EXPECT_NEAR(mh(2 * fc.erasure_index, 2 * fc.erasure_index).real(), 0.5, 1e-12) << name;
        EXPECT_LT(choi_distance(compose(flag_recombiner(n), fc.maps.channel), n.channel), 1e-9) << name;
        EXPECT_LT(choi_distance(compose(degrading_map(n), fc.maps.channel), fc.maps.complement), 1e-9) << name;
    }
}

TEST(Flagged, DegradingMapIsChannel) {
    const auto n = amplitude_damping(0.4);
    const ChannelMap dmap = degrading_map(n);
    const CMatrix c = choi(dmap);
    EXPECT_GT(min_eigenvalue(c), -1e-12);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 5; ++t) {
        const CMatrix x = oracle::random_hermitian(dmap.in_dim, rng);
        EXPECT_NEAR(std::abs(dmap(x).trace() - x.trace()), 0.0, 1e-12);
    }
    const ChannelMap l = flag_recombiner(n);
    EXPECT_GT(min_eigenvalue(choi(l)), -1e-12);
}
