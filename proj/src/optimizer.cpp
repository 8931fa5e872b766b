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

#include "privcap/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace privcap {

namespace {

class StandardFormSearch {
 public:
    StandardFormSearch(const FiniteVChannel& ch, std::size_t n, std::vector<std::size_t> active)
        : ch_(ch), n_(n), dn_(ipow(ch.d(), n)), active_(std::move(active)) {}

    std::size_t dim() const { return active_.size() * (1 + 2 * dn_); }

    StandardFormInput decode(const Eigen::VectorXd& x) const {
        const std::size_t k = active_.size();
        const double top = x.head(static_cast<Eigen::Index>(k)).maxCoeff();
        std::vector<double> p(dn_, 0.0);
        double z = 0.0;
        for (std::size_t a = 0; a < k; ++a) z += std::exp(x[static_cast<Eigen::Index>(a)] - top);
        std::vector<PureState> shields(dn_, PureState::basis(dn_, 0));
        for (std::size_t a = 0; a < k; ++a) {
            p[active_[a]] = std::exp(x[static_cast<Eigen::Index>(a)] - top) / z;
            shields[active_[a]] = PureState::normalize(shield_raw(x, a));
        }
        // Absorb the rounding residue so p sums to 1 within 1e-12.
        double total = 0.0;
        for (double v : p) total += v;
        for (auto a : active_) p[a] /= total;
        return StandardFormInput(ch_.d(), n_, std::move(p), std::move(shields));
    }

    Eigen::VectorXd encode(const StandardFormInput& s) const {
        Eigen::VectorXd x(static_cast<Eigen::Index>(dim()));
        for (std::size_t a = 0; a < active_.size(); ++a) {
            x[static_cast<Eigen::Index>(a)] = std::log(s.p()[active_[a]]);
            set_shield(x, a, s.shields()[active_[a]].amplitudes());
        }
        project(x);
        return x;
    }

    Eigen::VectorXd random_start(std::mt19937_64& engine) const {
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::VectorXd x(static_cast<Eigen::Index>(dim()));
        for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(engine);
        project(x);
        return x;
    }

    void project(Eigen::VectorXd& x) const {
        const auto k = static_cast<Eigen::Index>(active_.size());
        const double mean = x.head(k).mean();
        x.head(k).array() -= mean;
        for (std::size_t a = 0; a < active_.size(); ++a) {
            CVector z = shield_raw(x, a);
            const double nrm = z.norm();
            if (nrm > 0.0 && std::isfinite(nrm)) set_shield(x, a, z / nrm);
        }
    }

    double value(const Eigen::VectorXd& x) const {
        return standard_form_coherent_information(ch_, decode(x));
    }

 private:
    CVector shield_raw(const Eigen::VectorXd& x, std::size_t a) const {
        const std::size_t off = active_.size() + a * 2 * dn_;
        CVector z(static_cast<Eigen::Index>(dn_));
        for (std::size_t j = 0; j < dn_; ++j) {
            z[static_cast<Eigen::Index>(j)] = Complex(x[static_cast<Eigen::Index>(off + j)],
                                                      x[static_cast<Eigen::Index>(off + dn_ + j)]);
        }
        return z;
    }

    void set_shield(Eigen::VectorXd& x, std::size_t a, const CVector& z) const {
        const std::size_t off = active_.size() + a * 2 * dn_;
        for (std::size_t j = 0; j < dn_; ++j) {
            x[static_cast<Eigen::Index>(off + j)] = z[static_cast<Eigen::Index>(j)].real();
            x[static_cast<Eigen::Index>(off + dn_ + j)] = z[static_cast<Eigen::Index>(j)].imag();
        }
    }

    const FiniteVChannel& ch_;
    std::size_t n_, dn_;
    std::vector<std::size_t> active_;
};

struct RestartOutcome {
    Eigen::VectorXd x;
    RestartTrace trace;
};

Eigen::VectorXd fd_gradient(const StandardFormSearch& search, const Eigen::VectorXd& x, double h) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double up = search.value(probe);
        probe[i] = x[i] - h;
        const double down = search.value(probe);
        probe[i] = x[i];
        g[i] = (up - down) / (2.0 * h);
    }
    return g;
}

RestartOutcome ascend(const StandardFormSearch& search, Eigen::VectorXd x,
                      const OptimizerOptions& opt) {
    RestartOutcome out;
    double f = search.value(x);
    Eigen::VectorXd g = fd_gradient(search, x, opt.fd_step);
    Eigen::VectorXd prev_x, prev_g;
    double alpha = 1.0;

    std::size_t it = 0;
    bool converged = false;
    for (; it < opt.max_iterations; ++it) {
        if (!std::isfinite(g.squaredNorm()) || g.squaredNorm() == 0.0) {
            converged = true;
            break;
        }
        if (prev_x.size() == x.size()) {
            const Eigen::VectorXd s = x - prev_x;
            const Eigen::VectorXd y = g - prev_g;
            const double sy = -s.dot(y);
            alpha = (sy > 0.0 && std::isfinite(sy)) ? s.squaredNorm() / sy : 1.0;
            alpha = std::clamp(alpha, 1e-6, 1e3);
        }

        bool accepted = false;
        Eigen::VectorXd trial;
        double f_trial = f;
        for (int halving = 0; halving < 40; ++halving) {
            trial = x + alpha * g;
            search.project(trial);
            f_trial = search.value(trial);
            if (std::isfinite(f_trial) && f_trial > f + 1e-4 * g.dot(trial - x)) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            converged = true;
            break;
        }

        const double gain = f_trial - f;
        prev_x = std::move(x);
        prev_g = std::move(g);
        x = std::move(trial);
        f = f_trial;
        if (gain < opt.rel_tol * std::max(1.0, std::abs(f))) {
            converged = true;
            ++it;
            break;
        }
        g = fd_gradient(search, x, opt.fd_step);
    }
    out.x = std::move(x);
    out.trace = RestartTrace{it, f, converged};
    return out;
}

}  // namespace

OptimizerResult optimize_coherent_info(const FiniteVChannel& ch, const RngSeed& seed,
                                       const OptimizerOptions& options, const ExecPolicy& exec) {
    if (options.restarts < 1) throw ParameterError("optimize_coherent_info: restarts must be >= 1");
    if (options.n < 1) throw ParameterError("optimize_coherent_info: n must be >= 1");
    const std::size_t dn = ipow(ch.d(), options.n);
    check_dimension(dn * dn, "optimize_coherent_info");
    if (options.initial && (options.initial->d() != ch.d() || options.initial->n() != options.n)) {
        throw DimensionError("optimize_coherent_info: initial point has the wrong shape");
    }

    std::vector<std::size_t> all(dn);
    for (std::size_t x = 0; x < dn; ++x) all[x] = x;

    auto outcomes = kernels::map_indexed<std::pair<StandardFormInput, RestartTrace>>(
        exec, options.restarts, [&](std::size_t r) {
            if (r == 0 && options.initial) {
                std::vector<std::size_t> active;
                for (std::size_t x = 0; x < dn; ++x) {
                    if (options.initial->p()[x] > 0.0) active.push_back(x);
                }
                StandardFormSearch search(ch, options.n, active);
                auto res = ascend(search, search.encode(*options.initial), options);
                return std::make_pair(search.decode(res.x), res.trace);
            }
            StandardFormSearch search(ch, options.n, all);
            auto engine = seed.substream(r).engine();
            auto res = ascend(search, search.random_start(engine), options);
            return std::make_pair(search.decode(res.x), res.trace);
        });

    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    OptimizerResult result{{}, outcomes.front().first, 0, {}, false, seed};
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        const auto& trace = outcomes[r].second;
        result.restarts.push_back(trace);
        if (!trace.converged) result.budget_exhausted = true;
        if (std::isfinite(trace.value) && trace.value > best_value) {
            best_value = trace.value;
            best = r;
        }
    }
    result.best_restart = best;
    result.input = outcomes[best].first;
    result.bound = BoundValue{best_value, BoundKind::LowerCertificate,
                             to_string(ch.ensemble().kind()) + " d=" + std::to_string(ch.d()) +
                                 " m=" + std::to_string(ch.ensemble().size()) +
                                 " n=" + std::to_string(options.n) +
                                 " seed=[" + std::to_string(seed.seed) + "," +
                                 std::to_string(seed.stream) + "]"};
    return result;
}

}  // namespace privcap
