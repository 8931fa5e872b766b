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

#include "privcap/capacity.hpp"

#include <cmath>
#include <numbers>

namespace privcap {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// u_x = Z^x (V_1 ⊗ ... ⊗ V_n) φ, digits of x most significant first.
CVector shielded_vector(const CVector& phi, std::size_t x, std::size_t d, std::size_t n,
                        const std::vector<const CMatrix*>& vs) {
    CVector u = phi;
    for (std::size_t i = 0; i < n; ++i) u = apply_local(u, d, n, i, *vs[i]);
    const std::size_t dn = ipow(d, n);
    for (std::size_t j = 0; j < dn; ++j) {
        std::size_t e = 0, xr = x, jr = j;
        for (std::size_t i = 0; i < n; ++i) {
            e += (xr % d) * (jr % d);
            xr /= d;
            jr /= d;
        }
        e %= d;
        u[static_cast<Eigen::Index>(j)] *=
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d));
    }
    return u;
}

}  // namespace

StateEnsemble::StateEnsemble(std::vector<StateEnsembleMember> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw ParameterError("StateEnsemble: no members");
    double total = 0.0;
    for (const auto& m : members_) {
        if (!(m.probability > 0.0)) throw ParameterError("StateEnsemble: probabilities must be positive");
        if (m.state.dim() != members_.front().state.dim()) {
            throw DimensionError("StateEnsemble: members differ in dimension");
        }
        total += m.probability;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ParameterError("StateEnsemble: probabilities do not sum to 1");
}

StandardFormInput::StandardFormInput(std::size_t d, std::size_t n, std::vector<double> p,
                                     std::vector<PureState> shields)
    : d_(d), n_(n), p_(std::move(p)), shields_(std::move(shields)) {
    if (d_ < 2) throw ParameterError("StandardFormInput: d must be >= 2");
    if (n_ < 1) throw ParameterError("StandardFormInput: n must be >= 1");
    const std::size_t dn = ipow(d_, n_);
    check_dimension(dn * dn, "StandardFormInput");
    if (p_.size() != dn) throw DimensionError("StandardFormInput: p must have d^n entries");
    if (shields_.size() != dn) throw DimensionError("StandardFormInput: need one shield per string");
    double total = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0) || !std::isfinite(x)) throw ParameterError("StandardFormInput: invalid probability");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ParameterError("StandardFormInput: p does not sum to 1");
    for (const auto& s : shields_) {
        if (s.dim() != dn) throw DimensionError("StandardFormInput: shield must live on d^n dims");
    }
}

StandardFormInput StandardFormInput::uniform_computational(std::size_t d, std::size_t n) {
    const std::size_t dn = ipow(d, n);
    std::vector<double> p(dn, 1.0 / static_cast<double>(dn));
    std::vector<PureState> shields(dn, PureState::basis(dn, 0));
    return StandardFormInput(d, n, std::move(p), std::move(shields));
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::LowerCertificate: return "lower_certificate";
        case BoundKind::UpperClosedForm: return "upper_closed_form";
        case BoundKind::Exact: return "exact";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

std::vector<double> coherent_information_terms(const FiniteVChannel& ch, const DensityMatrix& rho,
                                               const ExecPolicy& exec) {
    if (rho.dim() != ch.input_dim()) throw DimensionError("coherent_information: input must be d^2");
    const auto& members = ch.ensemble().members();
    return kernels::map_trials(exec, members.size(), [&](std::size_t v) {
        const CMatrix w = ch.isometry_for(v);
        const CMatrix out = w * rho.matrix() * w.adjoint();
        const Dims dims{ch.d(), ch.d()};
        return entropy_vn(partial_trace(out, dims, {0})) - entropy_vn(partial_trace(out, dims, {1}));
    });
}

double coherent_information(const FiniteVChannel& ch, const DensityMatrix& rho,
                            const ExecPolicy& exec) {
    const auto terms = coherent_information_terms(ch, rho, exec);
    double total = 0.0;
    for (std::size_t v = 0; v < terms.size(); ++v) total += ch.ensemble()[v].weight * terms[v];
    return total;
}

double coherent_information(const ComplementaryPair& n, const DensityMatrix& rho) {
    return entropy_vn(n.channel(rho.matrix())) - entropy_vn(n.complement(rho.matrix()));
}

double coherent_information_multi(const FiniteVChannel& ch, const DensityMatrix& rho,
                                  std::size_t n) {
    double total = 0.0;
    ch.for_each_multi_use_block(rho, n, [&](double w, const CMatrix& b, const CMatrix& e) {
        total += w * (entropy_vn(b) - entropy_vn(e));
    });
    return total;
}

double standard_form_coherent_information(const FiniteVChannel& ch, const StandardFormInput& s) {
    if (s.d() != ch.d()) throw DimensionError("standard form input has a different d");
    const std::size_t d = s.d(), n = s.n();
    const std::size_t dn = ipow(d, n);
    const std::size_t m = ch.ensemble().size();
    const std::size_t tuples = ipow(m, n);

    std::vector<std::size_t> active;
    for (std::size_t x = 0; x < s.strings(); ++x) {
        if (s.p()[x] > 0.0) active.push_back(x);
    }

    double cond_e = 0.0;
    std::vector<const CMatrix*> vs(n);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rem = t;
        double w = 1.0;
        for (std::size_t i = n; i-- > 0;) {
            const auto& mem = ch.ensemble()[rem % m];
            vs[i] = &mem.unitary.matrix();
            w *= mem.weight;
            rem /= m;
        }
        CMatrix e = CMatrix::Zero(static_cast<Eigen::Index>(dn), static_cast<Eigen::Index>(dn));
        for (auto x : active) {
            CVector u = shielded_vector(s.shields()[x].amplitudes(), x, d, n, vs);
            e.noalias() += s.p()[x] * (u * u.adjoint());
        }
        cond_e += w * entropy_vn(e);
    }
    return shannon_entropy(s.p()) - cond_e;
}

double holevo_chi(const std::vector<double>& p, const std::vector<DensityMatrix>& outputs) {
    if (p.size() != outputs.size() || p.empty()) throw DimensionError("holevo_chi: size mismatch");
    CMatrix avg = CMatrix::Zero(outputs.front().matrix().rows(), outputs.front().matrix().cols());
    double mixed = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (outputs[i].dim() != outputs.front().dim()) throw DimensionError("holevo_chi: dims differ");
        avg += p[i] * outputs[i].matrix();
        mixed += p[i] * entropy_vn(outputs[i]);
    }
    return entropy_vn(avg) - mixed;
}

double holevo_chi(const std::vector<double>& p, const std::vector<CQState>& outputs) {
    if (p.size() != outputs.size() || p.empty()) throw DimensionError("holevo_chi: size mismatch");
    const auto& ref = outputs.front();
    double chi = 0.0;
    for (std::size_t v = 0; v < ref.size(); ++v) {
        const double w = ref.blocks()[v].weight;
        std::vector<DensityMatrix> column;
        column.reserve(outputs.size());
        for (const auto& o : outputs) {
            if (o.size() != ref.size() || std::abs(o.blocks()[v].weight - w) > 1e-12) {
                throw DimensionError("holevo_chi: outputs do not share the classical register");
            }
            column.push_back(o.blocks()[v].rho);
        }
        chi += w * holevo_chi(p, column);
    }
    return chi;
}

double private_information(const FiniteVChannel& ch, const StateEnsemble& e,
                           const ExecPolicy& exec) {
    std::vector<double> p;
    std::vector<CQState> bside, eside;
    for (const auto& m : e.members()) {
        auto [b, env] = ch.apply_both(m.state, exec);
        p.push_back(m.probability);
        bside.push_back(std::move(b));
        eside.push_back(std::move(env));
    }
    return holevo_chi(p, bside) - holevo_chi(p, eside);
}

StateEnsemble achievability_ensemble(std::size_t d) {
    std::vector<StateEnsembleMember> members;
    const auto shield = DensityMatrix::maximally_mixed(d);
    for (std::size_t i = 0; i < d; ++i) {
        members.push_back({1.0 / static_cast<double>(d), tensor(DensityMatrix::basis(d, i), shield)});
    }
    return StateEnsemble(std::move(members));
}

DensityMatrix standard_form_input(const StandardFormInput& s) {
    const std::size_t dn = ipow(s.d(), s.n());
    const auto n = static_cast<Eigen::Index>(dn);
    CMatrix rho = CMatrix::Zero(n * n, n * n);
    for (std::size_t x = 0; x < dn; ++x) {
        if (s.p()[x] == 0.0) continue;
        const auto xi = static_cast<Eigen::Index>(x);
        rho.block(xi * n, xi * n, n, n) = s.p()[x] * s.shields()[x].projector();
    }
    return DensityMatrix(std::move(rho), trusted);
}

// ---------------------------------------------------------------------------

double privacy_upper_bound(std::size_t d_A, double q1) {
    if (d_A < 1) throw ParameterError("privacy_upper_bound: d_A must be positive");
    if (!(q1 >= 0.0)) throw ParameterError("privacy_upper_bound: q1 must be >= 0");
    return 0.5 * (std::log2(static_cast<double>(d_A)) + q1);
}

double half_objective(const ComplementaryPair& n, const DensityMatrix& rho) {
    return 0.5 * (entropy_vn(rho) + entropy_vn(n.channel(rho.matrix())) -
                  entropy_vn(n.complement(rho.matrix())));
}

double harmonic_number(std::size_t d) {
    double h = 0.0;
    for (std::size_t k = d; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    return h;
}

double avg_dephased_entropy_closed_form(std::size_t d) {
    if (d < 2) throw ParameterError("avg_dephased_entropy_closed_form: d must be >= 2");
    return std::numbers::log2e * (harmonic_number(d) - 1.0);
}

double closed_form_lower_bound(std::size_t d) {
    return std::log2(static_cast<double>(d)) - avg_dephased_entropy_closed_form(d);
}

double asymptotic_rate_constant() { return (1.0 - kEulerGamma) * std::numbers::log2e; }

}  // namespace privcap
