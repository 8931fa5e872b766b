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

#include "privcap/ensembles.hpp"

#include <cmath>
#include <deque>
#include <numbers>

namespace privcap {

namespace {

constexpr double kPhaseTol = 1e-9;

CMatrix conj_twirl_term(const CMatrix& m, const CMatrix& u) {
    CMatrix uu = tensor(u, u);
    return uu.adjoint() * m * uu;
}

void require_twirl_shape(const CMatrix& m, std::size_t d) {
    if (static_cast<std::size_t>(m.rows()) != d * d ||
        static_cast<std::size_t>(m.cols()) != d * d) {
        throw DimensionError("twirl: operand must be d^2 x d^2");
    }
}

bool same_up_to_tol(const CMatrix& a, const CMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff() <= kPhaseTol;
}

}  // namespace

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::HaarSample: return "haar";
        case EnsembleKind::CliffordExact: return "clifford";
        case EnsembleKind::ExplicitList: return "explicit";
    }
    return "unknown";
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
    if (s == "haar") return EnsembleKind::HaarSample;
    if (s == "clifford") return EnsembleKind::CliffordExact;
    if (s == "explicit") return EnsembleKind::ExplicitList;
    throw ParameterError("unknown ensemble kind '" + s + "'");
}

UnitaryEnsemble::UnitaryEnsemble(std::size_t d, EnsembleKind kind,
                                 std::vector<WeightedUnitary> members, RngSeed seed)
    : d_(d), kind_(kind), seed_(seed), members_(std::move(members)) {
    if (d_ < 1) throw ParameterError("UnitaryEnsemble: d must be positive");
    if (members_.empty()) throw ParameterError("UnitaryEnsemble: no members");
    double total = 0.0;
    for (const auto& m : members_) {
        if (m.unitary.dim() != d_) throw DimensionError("UnitaryEnsemble: member dimension != d");
        if (!(m.weight > 0.0)) throw ParameterError("UnitaryEnsemble: weights must be positive");
        total += m.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ParameterError("UnitaryEnsemble: weights sum to " + std::to_string(total));
    }
}

UnitaryEnsemble UnitaryEnsemble::explicit_list(std::vector<UnitaryMatrix> unitaries,
                                               std::vector<double> weights) {
    if (unitaries.empty()) throw ParameterError("explicit_list: no members");
    if (weights.empty()) weights.assign(unitaries.size(), 1.0 / static_cast<double>(unitaries.size()));
    if (weights.size() != unitaries.size()) {
        throw ParameterError("explicit_list: weight count != member count");
    }
    const std::size_t d = unitaries.front().dim();
    std::vector<WeightedUnitary> members;
    members.reserve(unitaries.size());
    for (std::size_t i = 0; i < unitaries.size(); ++i) {
        members.push_back({std::move(unitaries[i]), weights[i]});
    }
    return UnitaryEnsemble(d, EnsembleKind::ExplicitList, std::move(members));
}

// ---------------------------------------------------------------------------
// Haar sampling

UnitaryMatrix haar_unitary(std::size_t d, std::mt19937_64& engine) {
    if (d < 2) throw ParameterError("haar_unitary: d must be >= 2");
    check_dimension(d, "haar_unitary");
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix g(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            double re = gauss(engine);
            double im = gauss(engine);
            g(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix& r = qr.matrixQR();
    for (Eigen::Index k = 0; k < n; ++k) {
        Complex rkk = r(k, k);
        double mag = std::abs(rkk);
        Complex phase = mag > 0.0 ? std::conj(rkk) / mag : Complex(1.0, 0.0);
        q.col(k) *= phase;
    }
    return UnitaryMatrix(std::move(q), trusted);
}

UnitaryMatrix haar_unitary(std::size_t d, const RngSeed& rng) {
    auto engine = rng.engine();
    return haar_unitary(d, engine);
}

PureState haar_state(std::size_t d, const RngSeed& rng) {
    UnitaryMatrix u = haar_unitary(d, rng);
    return PureState(u.matrix().col(0), trusted);
}

UnitaryEnsemble haar_ensemble(std::size_t d, std::size_t m, const RngSeed& seed) {
    if (m == 0) throw ParameterError("haar_ensemble: need at least one sample");
    std::vector<WeightedUnitary> members;
    members.reserve(m);
    const double w = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) members.push_back({haar_unitary(d, seed.substream(k)), w});
    return UnitaryEnsemble(d, EnsembleKind::HaarSample, std::move(members), seed);
}

// ---------------------------------------------------------------------------
// Clifford group

CMatrix shift_gate(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix x = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) x((j + 1) % n, j) = 1.0;
    return x;
}

CMatrix clock_gate(std::size_t d, long long a) {
    const auto n = static_cast<Eigen::Index>(d);
    const long long dd = static_cast<long long>(d);
    CMatrix z = CMatrix::Zero(n, n);
    for (long long j = 0; j < dd; ++j) {
        long long e = ((a % dd) * j) % dd;
        if (e < 0) e += dd;
        z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                      static_cast<double>(dd));
    }
    return z;
}

CMatrix canonicalize_phase(const CMatrix& u) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            double mag = std::abs(u(r, c));
            if (mag > kPhaseTol) return u * (std::conj(u(r, c)) / mag);
        }
    }
    return u;
}

bool normalizes_paulis(const UnitaryMatrix& u) {
    const std::size_t d = u.dim();
    const CMatrix& m = u.matrix();
    const CMatrix x = shift_gate(d);
    for (const CMatrix& p : {x, clock_gate(d, 1)}) {
        CMatrix image = m * p * m.adjoint();
        bool found = false;
        for (std::size_t a = 0; a < d && !found; ++a) {
            CMatrix xa = CMatrix::Identity(image.rows(), image.cols());
            for (std::size_t k = 0; k < a; ++k) xa = x * xa;
            for (std::size_t b = 0; b < d && !found; ++b) {
                CMatrix pauli = xa * clock_gate(d, static_cast<long long>(b));
                double overlap = std::abs((pauli.adjoint() * image).trace()) / static_cast<double>(d);
                found = std::abs(overlap - 1.0) < 1e-9;
            }
        }
        if (!found) return false;
    }
    return true;
}

UnitaryEnsemble clifford_group(std::size_t d) {
    if (d != 2 && d != 3) throw ParameterError("clifford_group: only d in {2, 3} is supported");
    const auto n = static_cast<Eigen::Index>(d);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));

    CMatrix fourier(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            fourier(k, j) = std::pow(omega, static_cast<double>(j * k)) / std::sqrt(static_cast<double>(d));
        }
    }
    // Qubit phase gate diag(1, i); qutrit phase gate |j> -> omega^{j(j-1)/2} |j>.
    CMatrix phase = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        phase(j, j) = d == 2 ? std::pow(Complex(0.0, 1.0), static_cast<double>(j))
                             : std::pow(omega, static_cast<double>(j * (j - 1) / 2));
    }
    const std::vector<CMatrix> generators{fourier, phase, shift_gate(d), clock_gate(d, 1)};

    std::vector<CMatrix> elements{CMatrix::Identity(n, n)};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            CMatrix candidate = canonicalize_phase(g * elements[idx]);
            bool seen = false;
            for (const auto& e : elements) {
                if (same_up_to_tol(e, candidate)) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                elements.push_back(std::move(candidate));
                frontier.push_back(elements.size() - 1);
            }
        }
    }

    const double w = 1.0 / static_cast<double>(elements.size());
    std::vector<WeightedUnitary> members;
    members.reserve(elements.size());
    for (auto& e : elements) members.push_back({UnitaryMatrix(std::move(e)), w});
    return UnitaryEnsemble(d, EnsembleKind::CliffordExact, std::move(members));
}

// ---------------------------------------------------------------------------
// Second moments

double frame_potential(const UnitaryEnsemble& e, const ExecPolicy& exec) {
    const auto& members = e.members();
    const std::size_t m = members.size();
    std::vector<double> rows = kernels::map_trials(exec, m, [&](std::size_t j) {
        double acc = 0.0;
        const CMatrix& uj = members[j].unitary.matrix();
        for (std::size_t k = 0; k < m; ++k) {
            Complex tr = (uj.conjugate().cwiseProduct(members[k].unitary.matrix())).sum();
            double a2 = std::norm(tr);
            acc += members[k].weight * a2 * a2;
        }
        return members[j].weight * acc;
    });
    double total = 0.0;
    for (double r : rows) total += r;
    return total;
}

CMatrix swap_operator(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix f = CMatrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) f(i * n + j, j * n + i) = 1.0;
    }
    return f;
}

std::pair<CMatrix, CMatrix> sym_antisym_projectors(std::size_t d) {
    if (d < 2) throw ParameterError("sym_antisym_projectors: d must be >= 2");
    const auto n = static_cast<Eigen::Index>(d * d);
    CMatrix f = swap_operator(d);
    CMatrix id = CMatrix::Identity(n, n);
    return {0.5 * (id + f), 0.5 * (id - f)};
}

CMatrix second_moment_twirl(const CMatrix& m, const UnitaryEnsemble& e, const ExecPolicy& exec) {
    require_twirl_shape(m, e.d());
    const auto& members = e.members();
    return kernels::sum_matrices(exec, members.size(), m.rows(), m.cols(), [&](std::size_t i) {
        return CMatrix(members[i].weight * conj_twirl_term(m, members[i].unitary.matrix()));
    });
}

CMatrix twirl_closed_form(const CMatrix& m, std::size_t d) {
    require_twirl_shape(m, d);
    auto [sym, anti] = sym_antisym_projectors(d);
    const double dsym = static_cast<double>(d * (d + 1)) / 2.0;
    const double danti = static_cast<double>(d * (d - 1)) / 2.0;
    return (sym * m).trace() * sym / dsym + (anti * m).trace() * anti / danti;
}

CMatrix haar_twirl_monte_carlo(const CMatrix& m, std::size_t d, std::size_t trials,
                               const RngSeed& seed, const ExecPolicy& exec) {
    require_twirl_shape(m, d);
    if (trials == 0) throw ParameterError("haar_twirl_monte_carlo: trials must be positive");
    CMatrix sum = kernels::sum_matrices(exec, trials, m.rows(), m.cols(), [&](std::size_t t) {
        return conj_twirl_term(m, haar_unitary(d, seed.substream(t)).matrix());
    });
    return sum / static_cast<double>(trials);
}

CMatrix s_operator(long long a, std::size_t d) {
    if (d < 2) throw ParameterError("s_operator: d must be >= 2");
    const long long dd = static_cast<long long>(d);
    if (((a % dd) + dd) % dd == 0) {
        const auto n = static_cast<Eigen::Index>(d * d);
        return CMatrix::Identity(n, n);
    }
    auto [sym, anti] = sym_antisym_projectors(d);
    return sym / static_cast<double>(d + 1) - anti / static_cast<double>(d - 1);
}

}  // namespace privcap
