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
#include <stdexcept>

#include "privcap/ensembles.hpp"
#include "privcap/kernels.hpp"

using namespace privcap;

TEST(Kernels, MapTrialsSerialEqualsParallel) {
    auto f = [](std::size_t i) {
        auto e = RngSeed{3, 1}.substream(i).engine();
        std::normal_distribution<double> g;
        return std::sin(g(e)) + static_cast<double>(i % 7);
    };
    const auto serial = kernels::map_trials(ExecPolicy{1}, 5000, f);
    for (int threads : {2, 3, 8}) {
        const auto par = kernels::map_trials(ExecPolicy{threads}, 5000, f);
        EXPECT_EQ(serial, par);
    }
    const auto ms = kernels::mean_stderr(serial);
    EXPECT_TRUE(std::isfinite(ms.mean));
}

TEST(Kernels, MeanStderrKnownValues) {
    const auto ms = kernels::mean_stderr({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(ms.mean, 2.5);
    EXPECT_NEAR(ms.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
    EXPECT_EQ(kernels::mean_stderr({}).mean, 0.0);
    EXPECT_EQ(kernels::mean_stderr({2.0}).std_error, 0.0);
}

TEST(Kernels, MatrixReductionParallelIsThreadCountIndependent) {
    auto f = [](std::size_t t) { return CMatrix(haar_unitary(3, RngSeed{5, 5}.substream(t)).matrix()); };
    const std::size_t n = 3 * kernels::kChunk + 17;
    const CMatrix serial = kernels::sum_matrices(ExecPolicy{1}, n, 3, 3, f);
    const CMatrix p2 = kernels::sum_matrices(ExecPolicy{2}, n, 3, 3, f);
    const CMatrix p5 = kernels::sum_matrices(ExecPolicy{5}, n, 3, 3, f);
    EXPECT_TRUE(p2 == p5);
    EXPECT_LT((serial - p2).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Kernels, ExceptionsPropagate) {
    auto bad = [](std::size_t i) -> double {
        if (i == 37) throw std::runtime_error("trial failed");
        return 1.0;
    };
    EXPECT_THROW(kernels::map_trials(ExecPolicy{1}, 100, bad), std::runtime_error);
    EXPECT_THROW(kernels::map_trials(ExecPolicy{4}, 100, bad), std::runtime_error);
    auto badm = [](std::size_t i) -> CMatrix {
        if (i == 5) throw std::runtime_error("trial failed");
        return CMatrix::Identity(2, 2);
    };
    EXPECT_THROW(kernels::sum_matrices(ExecPolicy{4}, 10, 2, 2, badm), std::runtime_error);
}

TEST(Kernels, FramePotentialAndTwirlParallel) {
    const UnitaryEnsemble g = clifford_group(3);
    EXPECT_EQ(frame_potential(g), frame_potential(g, ExecPolicy{4}));
    const CMatrix zz = tensor(clock_gate(3, 1), clock_gate(3, -1));
    EXPECT_LT((second_moment_twirl(zz, g) - second_moment_twirl(zz, g, ExecPolicy{4})).cwiseAbs().maxCoeff(), 1e-14);
}
