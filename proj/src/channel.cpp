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

#include "privcap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace privcap {

namespace {

void require_operator(const CMatrix& x, std::size_t dim, const char* what) {
    if (static_cast<std::size_t>(x.rows()) != dim || static_cast<std::size_t>(x.cols()) != dim) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " operator, got " + std::to_string(x.rows()) +
                             "x" + std::to_string(x.cols()));
    }
}

CMatrix embed(const CMatrix& x, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix out = CMatrix::Zero(n, n);
    out.topLeftCorner(x.rows(), x.cols()) = x;
    return out;
}

CMatrix projector_onto(std::size_t dim, std::size_t k) {
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix p = CMatrix::Zero(n, n);
    p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
    return p;
}

// Register ⊗ flag with the flag as the last (qubit) factor.
CMatrix with_flag(const CMatrix& reg, std::size_t flag) {
    return tensor(reg, projector_onto(2, flag));
}

CMatrix flag_block(const CMatrix& y, std::size_t reg_dim, std::size_t flag) {
    const auto n = static_cast<Eigen::Index>(reg_dim);
    CMatrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) out(r, c) = y(2 * r + flag, 2 * c + flag);
    }
    return out;
}

Eigen::VectorXcd phase_diagonal(std::size_t d, std::size_t n) {
    // omega^{sum_i x_i j_i} for index (x, j) over A1^n ⊗ A2^n.
    const std::size_t dn = ipow(d, n);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dn * dn));
    for (std::size_t x = 0; x < dn; ++x) {
        for (std::size_t j = 0; j < dn; ++j) {
            std::size_t e = 0;
            std::size_t xr = x, jr = j;
            for (std::size_t i = 0; i < n; ++i) {
                e += (xr % d) * (jr % d);
                xr /= d;
                jr /= d;
            }
            e %= d;
            out[static_cast<Eigen::Index>(x * dn + j)] =
                std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d));
        }
    }
    return out;
}

// P (I ⊗ V) rho (I ⊗ V)^dagger P^dagger with P given by its diagonal.
CMatrix conjugate_by_w(const CMatrix& rho, const CMatrix& v, const Eigen::VectorXcd& phases) {
    const auto dv = v.rows();
    CMatrix iv = tensor(CMatrix::Identity(rho.rows() / dv, rho.rows() / dv), v);
    CMatrix out = iv * rho * iv.adjoint();
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
        const Complex pc = std::conj(phases[c]);
        for (Eigen::Index r = 0; r < out.rows(); ++r) out(r, c) *= phases[r] * pc;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Maps

CMatrix ChannelMap::operator()(const CMatrix& x) const {
    require_operator(x, in_dim, "ChannelMap input");
    CMatrix y = fn(x);
    require_operator(y, out_dim, "ChannelMap output");
    return y;
}

DensityMatrix ChannelMap::operator()(const DensityMatrix& rho) const {
    return DensityMatrix((*this)(rho.matrix()));
}

ChannelMap compose(const ChannelMap& l, const ChannelMap& m) {
    if (m.out_dim != l.in_dim) {
        throw DimensionError("compose: inner output dim " + std::to_string(m.out_dim) +
                             " != outer input dim " + std::to_string(l.in_dim));
    }
    return ChannelMap{m.in_dim, l.out_dim, [l, m](const CMatrix& x) { return l(m(x)); }};
}

CMatrix choi(const ChannelMap& map) {
    const std::size_t din = map.in_dim;
    check_dimension(din * map.out_dim, "choi");
    const auto n = static_cast<Eigen::Index>(din);
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(map.out_dim * din),
                                static_cast<Eigen::Index>(map.out_dim * din));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            CMatrix unit = CMatrix::Zero(n, n);
            unit(i, j) = 1.0;
            out += tensor(map(unit), unit);
        }
    }
    return out / static_cast<double>(din);
}

double choi_distance(const ChannelMap& a, const ChannelMap& b) {
    if (a.in_dim != b.in_dim || a.out_dim != b.out_dim) {
        throw DimensionError("choi_distance: maps have different shapes");
    }
    return trace_distance(choi(a), choi(b));
}

ChannelMap identity_map(std::size_t dim) {
    return ChannelMap{dim, dim, [](const CMatrix& x) { return x; }};
}

ComplementaryPair identity_pair(std::size_t dim) {
    return {identity_map(dim), ChannelMap{dim, 1, [](const CMatrix& x) {
                                              CMatrix t(1, 1);
                                              t(0, 0) = x.trace();
                                              return t;
                                          }}};
}

ComplementaryPair dephasing_pair(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix u = CMatrix::Zero(n * n, n);
    for (Eigen::Index j = 0; j < n; ++j) u(j * n + j, j) = 1.0;
    return from_isometry(u, dim, dim);
}

ChannelMap dephasing_on_factor(const Dims& dims, std::size_t target) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    return ChannelMap{total, total, [dims, target](const CMatrix& x) {
                          return dephase(x, dims, target);
                      }};
}

ComplementaryPair from_isometry(const CMatrix& u, std::size_t b_dim, std::size_t e_dim) {
    if (static_cast<std::size_t>(u.rows()) != b_dim * e_dim) {
        throw DimensionError("from_isometry: rows != b_dim * e_dim");
    }
    if ((u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() >
        tol::kUnitary) {
        throw InvalidStateError("from_isometry: U^dagger U != I");
    }
    const auto in = static_cast<std::size_t>(u.cols());
    const Dims dims{b_dim, e_dim};
    return {ChannelMap{in, b_dim,
                       [u, dims](const CMatrix& x) {
                           return partial_trace(CMatrix(u * x * u.adjoint()), dims, {0});
                       }},
            ChannelMap{in, e_dim, [u, dims](const CMatrix& x) {
                           return partial_trace(CMatrix(u * x * u.adjoint()), dims, {1});
                       }}};
}

// ---------------------------------------------------------------------------
// Gates

UnitaryMatrix controlled_phase(std::size_t d) {
    if (d < 2) throw ParameterError("controlled_phase: d must be >= 2");
    return UnitaryMatrix(CMatrix(phase_diagonal(d, 1).asDiagonal()), trusted);
}

UnitaryMatrix z_string(const std::vector<std::size_t>& x, std::size_t d) {
    if (d < 2) throw ParameterError("z_string: d must be >= 2");
    if (x.empty()) throw ParameterError("z_string: empty tuple");
    check_dimension(ipow(d, x.size()), "z_string");
    CMatrix out = CMatrix::Identity(1, 1);
    for (auto xi : x) {
        if (xi >= d) throw ParameterError("z_string: component out of range");
        out = tensor(out, clock_gate(d, static_cast<long long>(xi)));
    }
    return UnitaryMatrix(std::move(out), trusted);
}

// ---------------------------------------------------------------------------
// CQState

CQState::CQState(std::vector<CQBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw ParameterError("CQState: no blocks");
    double total = 0.0;
    for (const auto& b : blocks_) {
        if (!(b.weight > 0.0)) throw ParameterError("CQState: weights must be positive");
        if (b.rho.dim() != blocks_.front().rho.dim()) {
            throw DimensionError("CQState: blocks differ in dimension");
        }
        total += b.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ParameterError("CQState: weights do not sum to 1");
}

double CQState::conditional_entropy() const {
    double s = 0.0;
    for (const auto& b : blocks_) s += b.weight * entropy_vn(b.rho);
    return s;
}

double CQState::total_trace() const {
    double t = 0.0;
    for (const auto& b : blocks_) t += b.weight * b.rho.matrix().trace().real();
    return t;
}

CMatrix CQState::to_matrix() const {
    const auto m = static_cast<Eigen::Index>(blocks_.size());
    const auto n = static_cast<Eigen::Index>(dim());
    check_dimension(static_cast<std::size_t>(m * n), "CQState::to_matrix");
    CMatrix out = CMatrix::Zero(n * m, n * m);
    for (Eigen::Index v = 0; v < m; ++v) {
        const auto& b = blocks_[static_cast<std::size_t>(v)];
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) out(r * m + v, c * m + v) = b.weight * b.rho.matrix()(r, c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stinespring

StinespringIsometry::StinespringIsometry(CMatrix u, std::size_t in_dim, std::size_t b_dim,
                                         std::size_t e_dim, std::size_t classical_count)
    : u_(std::move(u)), in_dim_(in_dim), b_dim_(b_dim), e_dim_(e_dim), classical_(classical_count) {
    if (static_cast<std::size_t>(u_.cols()) != in_dim_ ||
        static_cast<std::size_t>(u_.rows()) != b_dim_ * e_dim_ * classical_ * classical_) {
        throw DimensionError("StinespringIsometry: shape does not match declared dims");
    }
    if ((u_.adjoint() * u_ - CMatrix::Identity(u_.cols(), u_.cols())).cwiseAbs().maxCoeff() >
        tol::kUnitary) {
        throw InvalidStateError("StinespringIsometry: U^dagger U != I");
    }
}

ComplementaryPair StinespringIsometry::pair() const {
    const Dims dims{b_dim_, e_dim_, classical_, classical_};
    const CMatrix u = u_;
    const std::size_t in = in_dim_;
    return {ChannelMap{in, b_dim_ * classical_,
                       [u, dims](const CMatrix& x) {
                           return partial_trace(CMatrix(u * x * u.adjoint()), dims, {0, 2});
                       }},
            ChannelMap{in, e_dim_ * classical_, [u, dims](const CMatrix& x) {
                           return partial_trace(CMatrix(u * x * u.adjoint()), dims, {1, 3});
                       }}};
}

// ---------------------------------------------------------------------------
// FiniteVChannel

FiniteVChannel::FiniteVChannel(UnitaryEnsemble ensemble)
    : d_(ensemble.d()), ensemble_(std::move(ensemble)), phases_(phase_diagonal(d_, 1)) {
    if (d_ < 2) throw ParameterError("FiniteVChannel: d must be >= 2");
}

CMatrix FiniteVChannel::isometry_for(std::size_t member) const {
    const auto n = static_cast<Eigen::Index>(d_);
    CMatrix iv = tensor(CMatrix::Identity(n, n), ensemble_[member].unitary.matrix());
    return phases_.asDiagonal() * iv;
}

std::pair<CMatrix, CMatrix> FiniteVChannel::member_blocks(const CMatrix& rho,
                                                          std::size_t member) const {
    CMatrix out = conjugate_by_w(rho, ensemble_[member].unitary.matrix(), phases_);
    const Dims dims{d_, d_};
    return {partial_trace(out, dims, {0}), partial_trace(out, dims, {1})};
}

std::pair<CQState, CQState> FiniteVChannel::apply_both(const DensityMatrix& rho,
                                                       const ExecPolicy& exec) const {
    require_operator(rho.matrix(), input_dim(), "FiniteVChannel::apply");
    auto blocks = kernels::map_indexed<std::pair<CMatrix, CMatrix>>(
        exec, ensemble_.size(), [&](std::size_t i) { return member_blocks(rho.matrix(), i); });
    std::vector<CQBlock> bside, eside;
    bside.reserve(blocks.size());
    eside.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const double w = ensemble_[i].weight;
        bside.push_back({w, DensityMatrix(std::move(blocks[i].first), trusted)});
        eside.push_back({w, DensityMatrix(std::move(blocks[i].second), trusted)});
    }
    return {CQState(std::move(bside), trusted), CQState(std::move(eside), trusted)};
}

CQState FiniteVChannel::apply(const DensityMatrix& rho, const ExecPolicy& exec) const {
    return apply_both(rho, exec).first;
}

CQState FiniteVChannel::apply_complement(const DensityMatrix& rho, const ExecPolicy& exec) const {
    return apply_both(rho, exec).second;
}

void FiniteVChannel::for_each_multi_use_block(
    const DensityMatrix& rho, std::size_t n,
    const std::function<void(double, const CMatrix&, const CMatrix&)>& visit) const {
    if (n == 0) throw ParameterError("multi-use: n must be positive");
    const std::size_t dn = ipow(d_, n);
    check_dimension(dn * dn, "multi-use input");
    require_operator(rho.matrix(), dn * dn, "multi-use input");
    const Eigen::VectorXcd phases = phase_diagonal(d_, n);
    const std::size_t m = ensemble_.size();
    const std::size_t tuples = ipow(m, n);
    const Dims dims{dn, dn};
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rem = t;
        for (std::size_t i = n; i-- > 0;) {
            idx[i] = rem % m;
            rem /= m;
        }
        CMatrix vn = CMatrix::Identity(1, 1);
        double w = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            vn = tensor(vn, ensemble_[idx[i]].unitary.matrix());
            w *= ensemble_[idx[i]].weight;
        }
        CMatrix out = conjugate_by_w(rho.matrix(), vn, phases);
        visit(w, partial_trace(out, dims, {0}), partial_trace(out, dims, {1}));
    }
}

StinespringIsometry FiniteVChannel::isometry() const {
    const std::size_t m = ensemble_.size();
    const std::size_t rows = d_ * d_ * m * m;
    check_dimension(rows, "FiniteVChannel::isometry");
    const auto in = static_cast<Eigen::Index>(d_ * d_);
    CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(rows), in);
    for (std::size_t v = 0; v < m; ++v) {
        CMatrix w = std::sqrt(ensemble_[v].weight) * isometry_for(v);
        // output index ((b * d + e) * m + v_B) * m + v_E with (b, e) the W_V output
        for (Eigen::Index be = 0; be < in; ++be) {
            const auto row = static_cast<Eigen::Index>((static_cast<std::size_t>(be) * m + v) * m + v);
            u.row(row) = w.row(be);
        }
    }
    return StinespringIsometry(std::move(u), d_ * d_, d_, d_, m);
}

ComplementaryPair FiniteVChannel::as_pair() const {
    const std::size_t m = ensemble_.size();
    const std::size_t out = d_ * m;
    check_dimension(out, "FiniteVChannel::as_pair");
    auto self = std::make_shared<const FiniteVChannel>(*this);
    auto side = [self, m](bool environment) {
        return [self, m, environment](const CMatrix& x) {
            const auto d = static_cast<Eigen::Index>(self->d());
            const auto mm = static_cast<Eigen::Index>(m);
            CMatrix y = CMatrix::Zero(d * mm, d * mm);
            for (std::size_t v = 0; v < m; ++v) {
                auto [b, e] = self->member_blocks(x, v);
                const CMatrix& blk = environment ? e : b;
                const double w = self->ensemble()[v].weight;
                for (Eigen::Index c = 0; c < d; ++c) {
                    for (Eigen::Index r = 0; r < d; ++r) {
                        y(r * mm + static_cast<Eigen::Index>(v), c * mm + static_cast<Eigen::Index>(v)) =
                            w * blk(r, c);
                    }
                }
            }
            return y;
        };
    };
    return {ChannelMap{input_dim(), out, side(false)}, ChannelMap{input_dim(), out, side(true)}};
}

// ---------------------------------------------------------------------------
// Flagged extension

FlaggedChannel flagged_channel(const ComplementaryPair& n) {
    const std::size_t da = n.channel.in_dim;
    const std::size_t db = n.channel.out_dim;
    const std::size_t de = n.complement.out_dim;
    const std::size_t reg = std::max(da, db);
    const std::size_t eprime = de + 1;

    ChannelMap m{da, 2 * reg, [n, reg](const CMatrix& x) {
                     return CMatrix(0.5 * (with_flag(embed(x, reg), 0) +
                                           with_flag(embed(n.channel(x), reg), 1)));
                 }};
    ChannelMap mhat{da, 2 * eprime, [n, eprime, de](const CMatrix& x) {
                        CMatrix erased = projector_onto(eprime, de) * x.trace();
                        return CMatrix(0.5 * (with_flag(erased, 0) +
                                              with_flag(embed(n.complement(x), eprime), 1)));
                    }};
    return FlaggedChannel{{std::move(m), std::move(mhat)}, reg, de};
}

ChannelMap degrading_map(const ComplementaryPair& n) {
    const std::size_t da = n.channel.in_dim;
    const std::size_t db = n.channel.out_dim;
    const std::size_t de = n.complement.out_dim;
    const std::size_t reg = std::max(da, db);
    const std::size_t eprime = de + 1;
    return ChannelMap{2 * reg, 2 * eprime, [n, reg, da, de, eprime](const CMatrix& y) {
                          const CMatrix y0 = flag_block(y, reg, 0);
                          const CMatrix y1 = flag_block(y, reg, 1);
                          const auto a = static_cast<Eigen::Index>(da);
                          const CMatrix on_a = y0.topLeftCorner(a, a);
                          const Complex leaked = y0.trace() - on_a.trace();
                          // flag 0 -> 1: apply the complement; weight outside A is reset.
                          CMatrix flag1 = embed(n.complement(on_a), eprime) +
                                          projector_onto(eprime, de) * leaked;
                          // flag 1 -> 0: reset to the erasure symbol.
                          CMatrix flag0 = projector_onto(eprime, de) * y1.trace();
                          return CMatrix(with_flag(flag0, 0) + with_flag(flag1, 1));
                      }};
}

ChannelMap flag_recombiner(const ComplementaryPair& n) {
    const std::size_t da = n.channel.in_dim;
    const std::size_t db = n.channel.out_dim;
    const std::size_t reg = std::max(da, db);
    return ChannelMap{2 * reg, db, [n, reg, da, db](const CMatrix& y) {
                          const CMatrix y0 = flag_block(y, reg, 0);
                          const CMatrix y1 = flag_block(y, reg, 1);
                          const auto a = static_cast<Eigen::Index>(da);
                          const auto b = static_cast<Eigen::Index>(db);
                          const CMatrix on_a = y0.topLeftCorner(a, a);
                          const CMatrix on_b = y1.topLeftCorner(b, b);
                          const Complex leaked = (y0.trace() - on_a.trace()) + (y1.trace() - on_b.trace());
                          return CMatrix(n.channel(on_a) + on_b + projector_onto(db, 0) * leaked);
                      }};
}

}  // namespace privcap
