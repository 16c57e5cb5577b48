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

#include <array>
#include <cmath>
#include <numbers>

#include "qnc/channels.hpp"

namespace qnc {

namespace {

using std::numbers::pi;

const std::array<std::string, 4> kTwoBitLabels = {"00", "01", "10", "11"};

std::string bits_label(unsigned x, unsigned width) {
    std::string s;
    for (unsigned k = 0; k < width; k++) {
        s += ((x >> (width - 1 - k)) & 1) ? '1' : '0';
    }
    return s;
}

Mat ket_mat(const PureState &a, const PureState &b) {
    return Mat::outer(a.amps(), b.amps());
}

Mat conj_by(const Mat &u, const Mat &rho) {
    return u * rho * u.adjoint();
}

}  // namespace

Channel uc_clone() {
    static const Channel uc = [] {
        const double r2 = std::sqrt(2.0) / 3;
        PureState k00 = PureState::basis(2, 0);
        PureState k11 = PureState::basis(2, 3);
        PureState psi_plus = bell_state(2);
        Mat u00 = ket_mat(k00, k00) * (2.0 / 3) + ket_mat(psi_plus, psi_plus) * (1.0 / 3);
        Mat u11 = ket_mat(k11, k11) * (2.0 / 3) + ket_mat(psi_plus, psi_plus) * (1.0 / 3);
        Mat u01 = (ket_mat(psi_plus, k11) + ket_mat(k00, psi_plus)) * r2;
        Mat u10 = (ket_mat(k11, psi_plus) + ket_mat(psi_plus, k00)) * r2;
        return Channel::from_action(2, 4, [&](const Mat &m) {
            return u00 * m(0, 0) + u01 * m(0, 1) + u10 * m(1, 0) + u11 * m(1, 1);
        });
    }();
    return uc;
}

DensityOp uc_pair_state(const DensityOp &rho) {
    if (rho.nqubits() != 1) {
        throw UsageError("uc_pair_state: one-qubit input required");
    }
    const Mat &m = rho.mat();
    cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const Mat &I = gates::I();
    auto e = [](size_t i, size_t j) { return Mat::unit(2, i, j); };
    Mat out = kron(e(0, 0) * (2.0 * a / 3.0) + e(0, 1) * (b / 3.0) + e(1, 0) * (c / 3.0) + e(1, 1) * (1.0 / 6), e(0, 0));
    out += kron(e(1, 0) * (1.0 / 6) + I * (b / 3.0), e(0, 1));
    out += kron(e(0, 1) * (1.0 / 6) + I * (c / 3.0), e(1, 0));
    out += kron(e(0, 0) * (1.0 / 6) + e(0, 1) * (b / 3.0) + e(1, 0) * (c / 3.0) + e(1, 1) * (2.0 * d / 3.0), e(1, 1));
    return DensityOp(out);
}

Channel depolarize(ShrinkFactor p) {
    double q = p.p;
    return Channel::from_action(2, 2, [q](const Mat &m) { return m * q + gates::I() * ((1 - q) * m.trace() / 2.0); });
}

PureState plus_prime() {
    return PureState({1 / std::sqrt(2.0), cplx(0, 1 / std::sqrt(2.0))});
}

PureState minus_prime() {
    return PureState({1 / std::sqrt(2.0), cplx(0, -1 / std::sqrt(2.0))});
}

Channel pc_clone() {
    static const Channel pc = [] {
        // Ancilla-free cloner whose poles are |+'>, |-'>, X-twirled.
        PureState pp = plus_prime(), mp = minus_prime();
        Mat R{{pp.amps()[0], mp.amps()[0]}, {pp.amps()[1], mp.amps()[1]}};
        const double h = 1 / std::sqrt(2.0);
        Mat V0{{1, 0}, {0, h}, {0, h}, {0, 0}};
        Mat V = kron(R, R) * V0 * R.adjoint();
        Mat XX = kron(gates::X(), gates::X());
        return Channel({V * h, XX * V * gates::X() * h});
    }();
    return pc;
}

PureState tetra_state(unsigned r) {
    const double c = std::sqrt(0.5 + std::sqrt(3.0) / 6);
    const double s = std::sqrt(0.5 - std::sqrt(3.0) / 6);
    switch (r) {
        case 0:
            return PureState({c, std::polar(s, pi / 4)});
        case 1:
            return PureState({c, std::polar(s, -3 * pi / 4)});
        case 2:
            return PureState({s, std::polar(c, -pi / 4)});
        case 3:
            return PureState({s, std::polar(c, 3 * pi / 4)});
        default:
            throw UsageError("tetra_state: outcome must be 0..3");
    }
}

Povm ttr_povm() {
    std::vector<Povm::Element> el;
    for (unsigned r = 0; r < 4; r++) {
        el.push_back({kTwoBitLabels[r], tetra_state(r).projector() * 0.5});
    }
    return Povm(std::move(el));
}

Channel ttr_channel() {
    return ttr_povm().as_channel();
}

const Mat &gr_unitary(unsigned key) {
    switch (key) {
        case 0:
            return gates::I();
        case 1:
            return gates::Z();
        case 2:
            return gates::X();
        case 3:
            return gates::Y();
        default:
            throw UsageError("GR key must be two bits");
    }
}

DensityOp gr_apply(const DensityOp &rho, unsigned key) {
    if (rho.nqubits() != 1) {
        throw UsageError("gr_apply: one-qubit input required");
    }
    return DensityOp(conj_by(gr_unitary(key), rho.mat()));
}

Channel gr_ttr_channel() {
    static const Channel c =
        feedforward(ttr_povm(), 2, [](size_t r) { return Channel::unitary(gr_unitary(static_cast<unsigned>(r))); })
            .fold();
    return c;
}

static std::pair<const Mat *, const Mat *> v_pair(VPair which) {
    using namespace gates;
    switch (which) {
        case VPair::IZ:
            return {&I(), &Z()};
        case VPair::XY:
            return {&X(), &Y()};
        case VPair::IX:
            return {&I(), &X()};
        case VPair::YZ:
            return {&Y(), &Z()};
        case VPair::IY:
            return {&I(), &Y()};
        case VPair::ZX:
            return {&Z(), &X()};
    }
    throw UsageError("unknown twirl pair");
}

Channel v_twirl_channel(VPair which) {
    auto [a, b] = v_pair(which);
    const double h = 1 / std::sqrt(2.0);
    return Channel({*a * h, *b * h});
}

Mat v_twirl(VPair which, const Mat &rho) {
    auto [a, b] = v_pair(which);
    return (conj_by(*a, rho) + conj_by(*b, rho)) * 0.5;
}

DensityOp v_twirl(VPair which, const DensityOp &rho) {
    if (rho.nqubits() != 1) {
        throw UsageError("v_twirl: one-qubit input required");
    }
    return DensityOp(v_twirl(which, rho.mat()));
}

PureState bell_state(unsigned k) {
    const double h = 1 / std::sqrt(2.0);
    switch (k) {
        case 0:
            return PureState({h, 0, 0, h});
        case 1:
            return PureState({h, 0, 0, -h});
        case 2:
            return PureState({0, h, h, 0});
        case 3:
            return PureState({0, h, -h, 0});
        default:
            throw UsageError("bell_state: index must be 0..3");
    }
}

PureState basis_state(Basis b, unsigned bit) {
    if (bit > 1) {
        throw UsageError("basis_state: bit must be 0 or 1");
    }
    const double h = 1 / std::sqrt(2.0);
    switch (b) {
        case Basis::Z:
            return PureState::basis(1, bit);
        case Basis::X:
            return PureState({h, bit ? -h : h});
        case Basis::Y:
            return bit ? minus_prime() : plus_prime();
    }
    throw UsageError("unknown basis");
}

Povm basis_povm(Basis b) {
    return Povm({{"0", basis_state(b, 0).projector()}, {"1", basis_state(b, 1).projector()}});
}

Channel bm_branch(unsigned branch) {
    // Output per Bell outcome Phi+, Phi-, Psi+, Psi-.
    std::array<PureState, 4> outs = [&]() -> std::array<PureState, 4> {
        switch (branch) {
            case 0: {
                auto z0 = basis_state(Basis::Z, 0), z1 = basis_state(Basis::Z, 1);
                return {z0, z0, z1, z1};
            }
            case 1: {
                auto p = basis_state(Basis::X, 0), m = basis_state(Basis::X, 1);
                return {p, m, p, m};
            }
            case 2: {
                auto p = plus_prime(), m = minus_prime();
                return {m, p, p, m};
            }
            default:
                throw UsageError("bm_branch: branch must be 0..2");
        }
    }();
    std::vector<Mat> kraus;
    for (unsigned k = 0; k < 4; k++) {
        kraus.push_back(ket_mat(outs[k], bell_state(k)));
    }
    return Channel(std::move(kraus));
}

Channel bm_channel() {
    static const Channel c = mixture({{1.0 / 3, bm_branch(0)}, {1.0 / 3, bm_branch(1)}, {1.0 / 3, bm_branch(2)}});
    return c;
}

PureState qra2_state(unsigned x) {
    double t;
    switch (x) {
        case 0b00:
            t = pi / 8;
            break;
        case 0b10:
            t = 3 * pi / 8;
            break;
        case 0b11:
            t = 5 * pi / 8;
            break;
        case 0b01:
            t = 7 * pi / 8;
            break;
        default:
            throw UsageError("qra2_state: x must be two bits");
    }
    return PureState({std::cos(t), std::sin(t)});
}

PureState qra3_state(unsigned x) {
    if (x > 7) {
        throw UsageError("qra3_state: x must be three bits");
    }
    auto sign = [x](unsigned bit) { return ((x >> (2 - bit)) & 1) ? -1.0 : 1.0; };
    // Bit 1 on z, bit 2 on x, bit 3 on y.
    double bx = sign(1) / std::sqrt(3.0);
    double by = sign(2) / std::sqrt(3.0);
    double bz = sign(0) / std::sqrt(3.0);
    double polar = std::acos(bz);
    double azimuth = std::atan2(by, bx);
    return PureState({std::cos(polar / 2), std::polar(std::sin(polar / 2), azimuth)});
}

Povm mm2_povm() {
    std::vector<Povm::Element> el;
    for (unsigned z = 0; z < 4; z++) {
        el.push_back({kTwoBitLabels[z], qra2_state(z).projector() * 0.5});
    }
    return Povm(std::move(el));
}

Povm mm3_povm() {
    std::vector<Povm::Element> el;
    for (unsigned z = 0; z < 8; z++) {
        el.push_back({bits_label(z, 3), qra3_state(z).projector() * 0.25});
    }
    return Povm(std::move(el));
}

Channel inv_prime_channel() {
    static const Channel c = Channel::from_action(2, 2, [](const Mat &m) {
        Mat inv{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
        return inv * (1.0 / 3) + gates::I() * (m.trace() / 3.0);
    });
    return c;
}

DensityOp inv_prime(const DensityOp &rho) {
    return inv_prime_channel().apply(rho);
}

static const Mat *ag_group_element(unsigned key) {
    switch (key) {
        case 0b000:
            return &gates::I();
        case 0b011:
            return &gates::Z();
        case 0b101:
            return &gates::X();
        case 0b110:
            return &gates::Y();
        default:
            return nullptr;
    }
}

Channel ag_channel(unsigned key) {
    if (key > 7) {
        throw UsageError("AG key must be three bits");
    }
    if (const Mat *u = ag_group_element(key)) {
        return Channel::unitary(*u);
    }
    return compose(inv_prime_channel(), Channel::unitary(*ag_group_element(key ^ 0b111)));
}

DensityOp ag_apply(const DensityOp &rho, unsigned key) {
    return ag_channel(key).apply(rho);
}

DensityOp shrink_on_second(ShrinkFactor p, const DensityOp &rho12) {
    if (rho12.nqubits() != 2) {
        throw UsageError("shrink_on_second: two-qubit input required");
    }
    return tensor(Channel::identity(2), depolarize(p)).apply(rho12);
}

Channel classical_copy() {
    Mat k(4, 2);
    k(0, 0) = 1;
    k(3, 1) = 1;
    return Channel({k});
}

}  // namespace qnc
