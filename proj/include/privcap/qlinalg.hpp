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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "privcap/errors.hpp"

namespace privcap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

// Global cap on the side length of any constructed matrix. Default 4096.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);
void check_dimension(std::size_t dim, const char* what);

namespace tol {
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kNegativeEigen = 1e-9;
}  // namespace tol

/// Tag for constructors that skip validation. Only for values valid by construction
/// (isometric conjugation, partial trace of a valid state, convex combinations).
struct trusted_t {
    explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

class PureState {
 public:
    /// Throws InvalidStateError unless the Euclidean norm is within 1e-12 of 1.
    explicit PureState(CVector amplitudes);
    PureState(CVector amplitudes, trusted_t) : amps_(std::move(amplitudes)) {}

    static PureState basis(std::size_t dim, std::size_t k);
    /// Rescales a nonzero vector to unit norm.
    static PureState normalize(const CVector& v);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amplitudes() const { return amps_; }
    CMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
    CVector amps_;
};

class DensityMatrix {
 public:
    /// Validates hermiticity (1e-10 entrywise), unit trace (1e-10) and
    /// minimum eigenvalue >= -1e-9.
    explicit DensityMatrix(CMatrix m);
    DensityMatrix(CMatrix m, trusted_t) : m_(std::move(m)) {}

    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix basis(std::size_t dim, std::size_t k);
    static DensityMatrix diagonal(const std::vector<double>& probs);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }

 private:
    CMatrix m_;
};

class UnitaryMatrix {
 public:
    /// Throws InvalidStateError unless U^dagger U is within 1e-10 of identity.
    explicit UnitaryMatrix(CMatrix m);
    UnitaryMatrix(CMatrix m, trusted_t) : m_(std::move(m)) {}

    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint(), trusted); }

 private:
    CMatrix m_;
};

/// Kronecker product a ⊗ b. Throws CapExceededError past the dimension cap.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Traces out every factor not listed in `keep`. Kept factors appear in
/// ascending order. Works on arbitrary square operators (not only states).
CMatrix partial_trace(const CMatrix& m, const Dims& dims, std::vector<std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const Dims& dims,
                            std::vector<std::size_t> keep);

/// Spectrum of (H + H^dagger)/2, ascending.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& h);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) are clamped to
/// zero; anything more negative raises InvalidStateError.
double entropy_vn(const DensityMatrix& rho);
double entropy_vn(const CMatrix& hermitian);
/// -log2 Tr rho^2.
double entropy_renyi2(const DensityMatrix& rho);
double entropy_renyi2(const CMatrix& hermitian);
/// Shannon entropy in bits with 0 log 0 = 0.
double shannon_entropy(const std::vector<double>& p);

/// Completely dephasing map in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);
/// Dephases only tensor factor `target` of a multipartite operator.
CMatrix dephase(const CMatrix& m, const Dims& dims, std::size_t target);
DensityMatrix dephase(const DensityMatrix& rho, const Dims& dims, std::size_t target);

/// Largest absolute eigenvalue of the Hermitian part.
double op_inf_norm(const CMatrix& h);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// Half the trace norm of the Hermitian part of (a - b).
double trace_distance(const CMatrix& a, const CMatrix& b);

// Contractions on qudit registers. Qudit 0 is the most significant digit.

/// Applies a d x d operator to qudit `q` of an nq-qudit vector.
CVector apply_local(const CVector& v, std::size_t d, std::size_t nq, std::size_t q,
                    const CMatrix& op);
/// Applies a d^2 x d^2 operator to the ordered qudit pair (q1, q2).
CVector apply_pair(const CVector& v, std::size_t d, std::size_t nq, std::size_t q1,
                   std::size_t q2, const CMatrix& op);

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace privcap
