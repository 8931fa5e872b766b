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

#include "privcap/qlinalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

namespace privcap {

namespace {

std::atomic<std::size_t> g_cap{4096};

bool all_finite(const CMatrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
        }
    }
    return true;
}

void require_square(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

std::size_t product(const Dims& dims) {
    std::size_t p = 1;
    for (auto d : dims) {
        if (d == 0) throw DimensionError("tensor factor of dimension 0");
        p *= d;
    }
    return p;
}

double entropy_from_spectrum(const Eigen::VectorXd& evals) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        double lam = evals[i];
        if (lam < -tol::kNegativeEigen) {
            throw InvalidStateError("entropy: eigenvalue " + std::to_string(lam) +
                                    " below -1e-9");
        }
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return std::max(0.0, s);
}

}  // namespace

std::size_t dimension_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_dimension_cap(std::size_t cap) {
    if (cap == 0) throw ParameterError("dimension cap must be positive");
    g_cap.store(cap, std::memory_order_relaxed);
}

void check_dimension(std::size_t dim, const char* what) {
    if (dim > dimension_cap()) {
        throw CapExceededError(std::string(what) + ": dimension " + std::to_string(dim) +
                               " exceeds cap " + std::to_string(dimension_cap()));
    }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// Validated wrappers

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw DimensionError("PureState: empty vector");
    if (!all_finite(amps_)) throw InvalidStateError("PureState: non-finite amplitude");
    double n = amps_.norm();
    if (std::abs(n - 1.0) > tol::kNorm) {
        throw InvalidStateError("PureState: norm " + std::to_string(n) + " is not 1");
    }
}

PureState PureState::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw ParameterError("PureState::basis: index out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(k)] = 1.0;
    return PureState(std::move(v), trusted);
}

PureState PureState::normalize(const CVector& v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidStateError("PureState: cannot normalize");
    return PureState(v / n, trusted);
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
    require_square(m_, "DensityMatrix");
    check_dimension(static_cast<std::size_t>(m_.rows()), "DensityMatrix");
    if (!all_finite(m_)) throw InvalidStateError("DensityMatrix: non-finite entry");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian) {
        throw InvalidStateError("DensityMatrix: not Hermitian");
    }
    Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::kTrace) {
        throw InvalidStateError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
    }
    double min_eval = hermitian_eigenvalues(m_).minCoeff();
    if (min_eval < -tol::kNegativeEigen) {
        throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(min_eval));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector(), trusted);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw DimensionError("maximally_mixed: dim 0");
    check_dimension(dim, "maximally_mixed");
    auto n = static_cast<Eigen::Index>(dim);
    return DensityMatrix(CMatrix::Identity(n, n) / static_cast<double>(dim), trusted);
}

DensityMatrix DensityMatrix::basis(std::size_t dim, std::size_t k) {
    return from_pure(PureState::basis(dim, k));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probs) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(probs.size()),
                              static_cast<Eigen::Index>(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
    return DensityMatrix(std::move(m));
}

UnitaryMatrix::UnitaryMatrix(CMatrix m) : m_(std::move(m)) {
    require_square(m_, "UnitaryMatrix");
    check_dimension(static_cast<std::size_t>(m_.rows()), "UnitaryMatrix");
    if (!all_finite(m_)) throw InvalidStateError("UnitaryMatrix: non-finite entry");
    CMatrix g = m_.adjoint() * m_;
    g -= CMatrix::Identity(m_.rows(), m_.cols());
    if (g.cwiseAbs().maxCoeff() > tol::kUnitary) {
        throw InvalidStateError("UnitaryMatrix: U^dagger U deviates from identity");
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return UnitaryMatrix(CMatrix::Identity(n, n), trusted);
}

// ---------------------------------------------------------------------------
// Composites

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    if (a.size() == 0 || b.size() == 0) throw DimensionError("tensor: empty operand");
    check_dimension(static_cast<std::size_t>(a.rows() * b.rows()), "tensor");
    check_dimension(static_cast<std::size_t>(a.cols() * b.cols()), "tensor");
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()), trusted);
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(tensor(a.matrix(), b.matrix()), trusted);
}

CMatrix partial_trace(const CMatrix& m, const Dims& dims, std::vector<std::size_t> keep) {
    require_square(m, "partial_trace");
    if (dims.empty()) throw DimensionError("partial_trace: empty dims");
    if (product(dims) != static_cast<std::size_t>(m.rows())) {
        throw DimensionError("partial_trace: product of dims " + std::to_string(product(dims)) +
                             " != matrix dimension " + std::to_string(m.rows()));
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw DimensionError("partial_trace: duplicate kept factor");
    }
    if (!keep.empty() && keep.back() >= dims.size()) {
        throw DimensionError("partial_trace: kept factor index out of range");
    }

    const std::size_t nf = dims.size();
    std::vector<std::size_t> stride(nf);
    stride[nf - 1] = 1;
    for (std::size_t f = nf - 1; f > 0; --f) stride[f - 1] = stride[f] * dims[f];

    std::vector<bool> kept(nf, false);
    for (auto k : keep) kept[k] = true;

    // Offsets of every composite kept / traced index into the full index.
    auto offsets = [&](bool want_kept) {
        std::vector<std::size_t> offs{0};
        for (std::size_t f = 0; f < nf; ++f) {
            if (kept[f] != want_kept) continue;
            std::vector<std::size_t> next;
            next.reserve(offs.size() * dims[f]);
            for (auto o : offs) {
                for (std::size_t k = 0; k < dims[f]; ++k) next.push_back(o + k * stride[f]);
            }
            offs = std::move(next);
        }
        return offs;
    };
    const auto keep_off = offsets(true);
    const auto trace_off = offsets(false);

    const auto nk = static_cast<Eigen::Index>(keep_off.size());
    CMatrix out = CMatrix::Zero(nk, nk);
    for (Eigen::Index c = 0; c < nk; ++c) {
        for (Eigen::Index r = 0; r < nk; ++r) {
            Complex acc = 0.0;
            for (auto t : trace_off) {
                acc += m(static_cast<Eigen::Index>(keep_off[r] + t),
                         static_cast<Eigen::Index>(keep_off[c] + t));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Dims& dims,
                            std::vector<std::size_t> keep) {
    return DensityMatrix(partial_trace(rho.matrix(), dims, std::move(keep)), trusted);
}

// ---------------------------------------------------------------------------
// Spectral quantities

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& h) {
    require_square(h, "hermitian_eigenvalues");
    CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw InvalidStateError("eigensolver did not converge");
    return es.eigenvalues();
}

double entropy_vn(const CMatrix& hermitian) {
    return entropy_from_spectrum(hermitian_eigenvalues(hermitian));
}

double entropy_vn(const DensityMatrix& rho) { return entropy_vn(rho.matrix()); }

double entropy_renyi2(const CMatrix& hermitian) {
    require_square(hermitian, "entropy_renyi2");
    CMatrix sym = 0.5 * (hermitian + hermitian.adjoint());
    double purity = sym.squaredNorm();
    return std::max(0.0, -std::log2(purity));
}

double entropy_renyi2(const DensityMatrix& rho) { return entropy_renyi2(rho.matrix()); }

double shannon_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log2(x);
    }
    return std::max(0.0, h);
}

DensityMatrix dephase(const DensityMatrix& rho) {
    CMatrix out = CMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    out.diagonal() = rho.matrix().diagonal();
    return DensityMatrix(std::move(out), trusted);
}

CMatrix dephase(const CMatrix& m, const Dims& dims, std::size_t target) {
    require_square(m, "dephase");
    if (target >= dims.size()) throw DimensionError("dephase: factor index out of range");
    if (product(dims) != static_cast<std::size_t>(m.rows())) {
        throw DimensionError("dephase: product of dims does not match matrix dimension");
    }
    std::size_t stride = 1;
    for (std::size_t f = target + 1; f < dims.size(); ++f) stride *= dims[f];
    const std::size_t dt = dims[target];
    CMatrix out = m;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        std::size_t dc = (static_cast<std::size_t>(c) / stride) % dt;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if ((static_cast<std::size_t>(r) / stride) % dt != dc) out(r, c) = 0.0;
        }
    }
    return out;
}

DensityMatrix dephase(const DensityMatrix& rho, const Dims& dims, std::size_t target) {
    return DensityMatrix(dephase(rho.matrix(), dims, target), trusted);
}

double op_inf_norm(const CMatrix& h) {
    require_square(h, "op_inf_norm");
    return hermitian_eigenvalues(h).cwiseAbs().maxCoeff();
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("trace_distance: dimension mismatch");
    }
    return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.matrix(), b.matrix());
}

// ---------------------------------------------------------------------------
// Register contractions

CVector apply_local(const CVector& v, std::size_t d, std::size_t nq, std::size_t q,
                    const CMatrix& op) {
    if (q >= nq) throw DimensionError("apply_local: qudit index out of range");
    if (static_cast<std::size_t>(v.size()) != ipow(d, nq)) {
        throw DimensionError("apply_local: vector length is not d^nq");
    }
    if (static_cast<std::size_t>(op.rows()) != d || static_cast<std::size_t>(op.cols()) != d) {
        throw DimensionError("apply_local: operator is not d x d");
    }
    const std::size_t right = ipow(d, nq - q - 1);
    const std::size_t left = ipow(d, q);
    CVector out = CVector::Zero(v.size());
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t r = 0; r < right; ++r) {
            const std::size_t base = l * d * right + r;
            for (std::size_t j = 0; j < d; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) acc += op(j, k) * v[base + k * right];
                out[base + j * right] = acc;
            }
        }
    }
    return out;
}

CVector apply_pair(const CVector& v, std::size_t d, std::size_t nq, std::size_t q1,
                   std::size_t q2, const CMatrix& op) {
    if (q1 >= nq || q2 >= nq || q1 == q2) throw DimensionError("apply_pair: bad qudit pair");
    if (static_cast<std::size_t>(v.size()) != ipow(d, nq)) {
        throw DimensionError("apply_pair: vector length is not d^nq");
    }
    if (static_cast<std::size_t>(op.rows()) != d * d ||
        static_cast<std::size_t>(op.cols()) != d * d) {
        throw DimensionError("apply_pair: operator is not d^2 x d^2");
    }
    const std::size_t s1 = ipow(d, nq - q1 - 1);
    const std::size_t s2 = ipow(d, nq - q2 - 1);
    const std::size_t total = static_cast<std::size_t>(v.size());
    CVector out = CVector::Zero(v.size());
    CVector gathered(static_cast<Eigen::Index>(d * d));
    for (std::size_t base = 0; base < total; ++base) {
        if ((base / s1) % d != 0 || (base / s2) % d != 0) continue;
        for (std::size_t k1 = 0; k1 < d; ++k1) {
            for (std::size_t k2 = 0; k2 < d; ++k2) {
                gathered[static_cast<Eigen::Index>(k1 * d + k2)] = v[base + k1 * s1 + k2 * s2];
            }
        }
        CVector mixed = op * gathered;
        for (std::size_t j1 = 0; j1 < d; ++j1) {
            for (std::size_t j2 = 0; j2 < d; ++j2) {
                out[base + j1 * s1 + j2 * s2] = mixed[static_cast<Eigen::Index>(j1 * d + j2)];
            }
        }
    }
    return out;
}

}  // namespace privcap
