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

#include <cmath>

#include "qnc/qmath.hpp"

namespace qnc {

namespace {
double norm2(std::span<const cplx> v) {
    double s = 0;
    for (auto a : v) {
        s += std::norm(a);
    }
    return s;
}
}  // namespace

PureState::PureState(std::vector<cplx> amps) : amps_(std::move(amps)), nqubits_(qubits_for_dim(amps_.size())) {
    for (auto a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw UsageError("PureState: non-finite amplitude");
        }
    }
    if (std::abs(norm2(amps_) - 1) > tol::trace) {
        throw UsageError("PureState: amplitudes are not normalized");
    }
}

PureState PureState::normalized(std::vector<cplx> amps) {
    double n = std::sqrt(norm2(amps));
    if (!(n > 1e-300)) {
        throw UsageError("PureState: zero-norm vector");
    }
    for (auto &a : amps) {
        a /= n;
    }
    return PureState(std::move(amps));
}

PureState PureState::from_angles(double theta1, double theta2) {
    return PureState({std::cos(theta1), std::polar(1.0, theta2) * std::sin(theta1)});
}

PureState PureState::basis(size_t nqubits, size_t index) {
    size_t d = size_t{1} << nqubits;
    if (index >= d) {
        throw UsageError("PureState::basis: index out of range");
    }
    std::vector<cplx> v(d);
    v[index] = 1;
    return PureState(std::move(v));
}

Mat PureState::projector() const {
    return Mat::outer(amps_, amps_);
}

PureState PureState::perp() const {
    if (nqubits_ != 1) {
        throw UsageError("perp: only defined for one qubit");
    }
    return PureState({-std::conj(amps_[1]), std::conj(amps_[0])});
}

DensityOp::DensityOp(Mat m) : mat_(std::move(m)), nqubits_(0) {
    if (!mat_.square()) {
        throw UsageError("DensityOp: non-square matrix");
    }
    nqubits_ = qubits_for_dim(mat_.rows());
    if (!mat_.all_finite()) {
        throw UsageError("DensityOp: non-finite entry");
    }
    if (!mat_.is_hermitian(tol::herm)) {
        throw UsageError("DensityOp: not Hermitian");
    }
    if (std::abs(mat_.trace() - cplx(1)) > tol::trace) {
        throw UsageError("DensityOp: trace is not 1");
    }
    if (herm_eig(mat_).values.back() < -tol::psd) {
        throw UsageError("DensityOp: not positive semidefinite");
    }
}

DensityOp::DensityOp(const PureState &psi) : DensityOp(psi.projector()) {}

DensityOp DensityOp::maximally_mixed(size_t nqubits) {
    size_t d = size_t{1} << nqubits;
    return DensityOp(Mat::identity(d) * (1.0 / static_cast<double>(d)));
}

double BlochVec::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double distance(const BlochVec &a, const BlochVec &b) {
    return BlochVec{a.x - b.x, a.y - b.y, a.z - b.z}.norm();
}

BlochVec bloch_of(const Mat &rho) {
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw UsageError("Bloch coordinates need a one-qubit operator");
    }
    return {2 * rho(0, 1).real(), -2 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

BlochVec bloch_from_density(const DensityOp &rho) {
    return bloch_of(rho.mat());
}

DensityOp density_from_bloch(const BlochVec &v) {
    if (v.norm() > 1 + tol::psd) {
        throw UsageError("Bloch vector outside the unit ball");
    }
    return DensityOp(Mat{{(1 + v.z) / 2, cplx(v.x, -v.y) / 2.0}, {cplx(v.x, v.y) / 2.0, (1 - v.z) / 2}});
}

DensityOp tensor(const DensityOp &a, const DensityOp &b) {
    return DensityOp(kron(a.mat(), b.mat()));
}

DensityOp partial_trace(const DensityOp &rho, std::span<const size_t> keep) {
    return DensityOp(partial_trace(rho.mat(), keep));
}

DensityOp partial_trace(const DensityOp &rho, std::initializer_list<size_t> keep) {
    return partial_trace(rho, std::span<const size_t>(keep.begin(), keep.size()));
}

double fidelity_pure(const PureState &psi, const Mat &rho) {
    if (psi.dim() != rho.rows() || !rho.square()) {
        throw UsageError("fidelity_pure: dimension mismatch");
    }
    return inner(psi.amps(), rho * psi.amps()).real();
}

double fidelity_pure(const PureState &psi, const DensityOp &rho) {
    return fidelity_pure(psi, rho.mat());
}

double trace_distance(const DensityOp &a, const DensityOp &b) {
    if (a.dim() != b.dim()) {
        throw UsageError("trace_distance: dimension mismatch");
    }
    return trace_norm(a.mat() - b.mat());
}

}  // namespace qnc
