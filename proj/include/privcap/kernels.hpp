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

// Data-parallel loops used by every Monte Carlo and ensemble average.
//
// Each kernel exists twice: kernels::serial is the reference implementation
// (ascending index order, used by the acceptance suite), kernels::omp is the
// OpenMP version. Callers go through the dispatching overloads that take an
// ExecPolicy; threads <= 1 always selects the serial path.

#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#include <omp.h>

#include "privcap/qlinalg.hpp"

namespace privcap {

struct ExecPolicy {
    int threads = 1;
    bool parallel() const { return threads > 1; }
};

struct MeanStderr {
    double mean = 0.0;
    double std_error = 0.0;
};

namespace kernels {

/// Trials per chunk in the parallel matrix reduction. Fixed so the result
/// does not depend on the thread count.
inline constexpr std::size_t kChunk = 1024;

/// Mean and standard error (sample variance / n) summed in ascending order.
inline MeanStderr mean_stderr(const std::vector<double>& values) {
    MeanStderr out;
    const std::size_t n = values.size();
    if (n == 0) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    }
    return out;
}

namespace serial {

template <class T, class F>
std::vector<T> map_indexed(std::size_t n, F&& f) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
}

template <class F>
CMatrix sum_matrices(std::size_t n, Eigen::Index rows, Eigen::Index cols, F&& f) {
    CMatrix acc = CMatrix::Zero(rows, cols);
    for (std::size_t i = 0; i < n; ++i) acc += f(i);
    return acc;
}

}  // namespace serial

namespace omp {

template <class T, class F>
std::vector<T> map_indexed(std::size_t n, F&& f, int threads) {
    std::vector<std::optional<T>> slots(n);
    std::exception_ptr err;
    std::mutex err_mu;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long long i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

template <class F>
CMatrix sum_matrices(std::size_t n, Eigen::Index rows, Eigen::Index cols, F&& f, int threads) {
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<CMatrix> partial(chunks);
    std::exception_ptr err;
    std::mutex err_mu;
    const auto count = static_cast<long long>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long c = 0; c < count; ++c) {
        try {
            CMatrix acc = CMatrix::Zero(rows, cols);
            const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
            const std::size_t hi = std::min(n, lo + kChunk);
            for (std::size_t i = lo; i < hi; ++i) acc += f(i);
            partial[static_cast<std::size_t>(c)] = std::move(acc);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    CMatrix acc = CMatrix::Zero(rows, cols);
    for (const auto& p : partial) acc += p;
    return acc;
}

}  // namespace omp

template <class T, class F>
std::vector<T> map_indexed(const ExecPolicy& exec, std::size_t n, F&& f) {
    if (exec.parallel()) return omp::map_indexed<T>(n, std::forward<F>(f), exec.threads);
    return serial::map_indexed<T>(n, std::forward<F>(f));
}

/// Per-trial scalar values. Both paths return identical vectors.
template <class F>
std::vector<double> map_trials(const ExecPolicy& exec, std::size_t n, F&& f) {
    return map_indexed<double>(exec, n, std::forward<F>(f));
}

template <class F>
CMatrix sum_matrices(const ExecPolicy& exec, std::size_t n, Eigen::Index rows,
                     Eigen::Index cols, F&& f) {
    if (exec.parallel()) {
        return omp::sum_matrices(n, rows, cols, std::forward<F>(f), exec.threads);
    }
    return serial::sum_matrices(n, rows, cols, std::forward<F>(f));
}

}  // namespace kernels
}  // namespace privcap
