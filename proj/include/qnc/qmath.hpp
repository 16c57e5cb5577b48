// Copyright 2026 The qnc Authors
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

#ifndef QNC_QMATH_HPP
#define QNC_QMATH_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnc {

using cplx = std::complex<double>;

/// Bad arguments from the caller (dimension mismatch, invalid index, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double trace = 1e-10;
inline constexpr double herm = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double eig = 1e-10;
}  // namespace tol

/// Dense row-major complex matrix. Sizes here never exceed 32x32.
class Mat {
   public:
    Mat() = default;
    Mat(size_t rows, size_t cols);
    Mat(size_t rows, size_t cols, std::vector<cplx> entries);
    Mat(std::initializer_list<std::initializer_list<cplx>> rows);

    static Mat identity(size_t n);
    static Mat zeros(size_t n) { return Mat(n, n); }
    /// |a><b|
    static Mat outer(std::span<const cplx> a, std::span<const cplx> b);
    /// Matrix unit |i><j| in dimension n.
    static Mat unit(size_t n, size_t i, size_t j);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }
    bool square() const { return rows_ == cols_; }

    cplx &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const cplx> data() const { return entries_; }
    std::span<cplx> data() { return entries_; }

    Mat adjoint() const;
    Mat transpose() const;
    Mat conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    bool is_hermitian(double tolerance = tol::herm) const;
    bool all_finite() const;

    Mat &operator+=(const Mat &o);
    Mat &operator-=(const Mat &o);
    Mat &operator*=(cplx s);

    bool operator==(const Mat &o) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> entries_;
};

Mat operator+(Mat a, const Mat &b);
Mat operator-(Mat a, const Mat &b);
Mat operator*(const Mat &a, const Mat &b);
Mat operator*(Mat a, cplx s);
Mat operator*(cplx s, Mat a);
std::vector<cplx> operator*(const Mat &a, std::span<const cplx> v);

/// Kronecker product; a is the leftmost factor.
Mat kron(const Mat &a, const Mat &b);
std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b);
/// Largest elementwise |a-b|.
double max_abs_diff(const Mat &a, const Mat &b);
/// a^dagger b, summed over entries.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);

/// Number of qubits n with 2^n == dim, or UsageError.
size_t qubits_for_dim(size_t dim);

struct EigenSystem {
    std::vector<double> values;  // descending
    Mat vectors;                 // column k pairs with values[k]
};

/// Cyclic Jacobi for Hermitian matrices up to 32x32.
EigenSystem herm_eig(const Mat &m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Mat &hermitian);

/// Qubit-register helpers. Qubit 0 is the leftmost tensor factor.
Mat partial_trace(const Mat &rho, std::span<const size_t> keep);
/// Output qubit k is input qubit order[k].
Mat permute_qubits(const Mat &rho, std::span<const size_t> order);

class PureState {
   public:
    /// Amplitudes must have unit norm within tol::trace.
    explicit PureState(std::vector<cplx> amps);
    /// Rescales to unit norm; a zero vector is rejected.
    static PureState normalized(std::vector<cplx> amps);
    /// cos(t1)|0> + e^{i t2} sin(t1)|1>
    static PureState from_angles(double theta1, double theta2);
    static PureState basis(size_t nqubits, size_t index);

    size_t nqubits() const { return nqubits_; }
    size_t dim() const { return amps_.size(); }
    std::span<const cplx> amps() const { return amps_; }
    Mat projector() const;
    /// The orthogonal 1-qubit state, up to phase.
    PureState perp() const;

   private:
    std::vector<cplx> amps_;
    size_t nqubits_;
};

class DensityOp {
   public:
    /// Validates Hermiticity, unit trace and positivity.
    explicit DensityOp(Mat m);
    DensityOp(const PureState &psi);  // NOLINT: pure states are density operators
    static DensityOp maximally_mixed(size_t nqubits);

    const Mat &mat() const { return mat_; }
    size_t nqubits() const { return nqubits_; }
    size_t dim() const { return mat_.rows(); }

   private:
    Mat mat_;
    size_t nqubits_;
};

struct BlochVec {
    double x = 0, y = 0, z = 0;
    double norm() const;
};
double distance(const BlochVec &a, const BlochVec &b);

BlochVec bloch_from_density(const DensityOp &rho);
/// Same map on an arbitrary 2x2 operator: (Tr(rho X), Tr(rho Y), Tr(rho Z)), real parts.
BlochVec bloch_of(const Mat &rho);
DensityOp density_from_bloch(const BlochVec &v);

Mat tensor(const Mat &a, const Mat &b);
DensityOp tensor(const DensityOp &a, const DensityOp &b);
DensityOp partial_trace(const DensityOp &rho, std::span<const size_t> keep);
DensityOp partial_trace(const DensityOp &rho, std::initializer_list<size_t> keep);

/// <psi|rho|psi>
double fidelity_pure(const PureState &psi, const DensityOp &rho);
double fidelity_pure(const PureState &psi, const Mat &rho);
/// Sum of |eigenvalues| of a-b; no factor 1/2.
double trace_distance(const DensityOp &a, const DensityOp &b);

namespace gates {
const Mat &I();
const Mat &X();
const Mat &Z();
/// XZ, as a matrix. Conjugation by it equals conjugation by the Pauli Y.
const Mat &Y();
/// The Hermitian Pauli Y = iXZ; used only for Bloch coordinates.
const Mat &Ypauli();
const Mat &H();
}  // namespace gates

}  // namespace qnc

#endif
