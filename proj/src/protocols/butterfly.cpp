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

#include "protocols_internal.hpp"
#include "qnc/protocols.hpp"

namespace qnc {

namespace internal {

const Channel &uc_marginal(size_t which) {
    static const Channel m0 = trace_output(uc_clone(), {0});
    static const Channel m1 = trace_output(uc_clone(), {1});
    return which == 0 ? m0 : m1;
}

const Channel &cx_from_key() {
    static const Channel c =
        feedforward(basis_povm(Basis::Z), 2, [](size_t k) { return Channel::unitary(k ? gates::X() : gates::I()); })
            .fold();
    return c;
}

const Channel &gr_mm2() {
    static const Channel c =
        feedforward(mm2_povm(), 2, [](size_t z) { return Channel::unitary(gr_unitary(static_cast<unsigned>(z))); })
            .fold();
    return c;
}

const Channel &ag_mm3() {
    static const Channel c =
        feedforward(mm3_povm(), 2, [](size_t z) { return ag_channel(static_cast<unsigned>(z)); }).fold();
    return c;
}

Basis decode_basis(unsigned index) {
    static const std::array<Basis, 3> order = {Basis::Z, Basis::X, Basis::Y};
    return order.at(index - 1);
}

unsigned bit_of(unsigned x, unsigned width, unsigned index) {
    return (x >> (width - index)) & 1;
}

double xor_success(const Mat &rho2, Basis basis, unsigned target) {
    double s = 0;
    for (unsigned u = 0; u < 2; u++) {
        for (unsigned v = 0; v < 2; v++) {
            if ((u ^ v) == target) {
                PureState w(kron(basis_state(basis, u).amps(), basis_state(basis, v).amps()));
                s += fidelity_pure(w, rho2);
            }
        }
    }
    return s;
}

}  // namespace internal

using namespace internal;

namespace {

void check_bits(unsigned x, unsigned width, const char *what) {
    if (x >= (1u << width)) {
        throw UsageError(std::string(what) + " must be a " + std::to_string(width) + "-bit word");
    }
}

void check_index(unsigned i, unsigned max) {
    if (i < 1 || i > max) {
        throw UsageError("adversary index must be in 1.." + std::to_string(max));
    }
}

// (a, c) or (a, d) of a source that clones once and then clones its second copy.
Mat three_share_source(const Mat &in, const char *second) {
    RegisterMap r;
    r.add(uc_clone().apply(in), {"a", "b"});
    r.apply(uc_clone(), {"b"}, {"c", "d"});
    return r.marginal({"a", second});
}

}  // namespace

namespace linear {

Mat xqq_sink1(const Mat &in1, const Mat &in2) {
    RegisterMap r;
    r.add(uc_marginal(1).apply(in1), {"Q2"});
    r.add(uc_clone().apply(in2), {"Q3", "Q4"});
    r.apply(gr_ttr_channel(), {"Q2", "Q3"}, {"Q5"});
    r.apply(uc_marginal(1), {"Q5"}, {"Q7"});
    r.apply(gr_ttr_channel(), {"Q7", "Q4"}, {"out"});
    return r.op();
}

Mat xqq_sink2(const Mat &in1, const Mat &in2) {
    RegisterMap r;
    r.add(uc_clone().apply(in1), {"Q1", "Q2"});
    r.add(uc_marginal(0).apply(in2), {"Q3"});
    r.apply(gr_ttr_channel(), {"Q2", "Q3"}, {"Q5"});
    r.apply(uc_marginal(0), {"Q5"}, {"Q6"});
    r.apply(bm_channel(), {"Q1", "Q6"}, {"out"});
    return r.op();
}

Mat xqc_sink1(const Mat &in, unsigned b, bool averaged) {
    check_bits(b, 1, "b");
    RegisterMap r;
    r.add(uc_marginal(1).apply(in), {"Q2"});
    r.add(classical_copy().apply(Mat::unit(2, b, b)), {"Q3", "Q4"});
    r.apply(cx_from_key(), {"Q2", "Q3"}, {"Q5"});
    r.apply(uc_marginal(1), {"Q5"}, {"Q7"});
    r.apply(cx_from_key(), {"Q7", "Q4"}, {"out"});
    if (!averaged) {
        return r.op();
    }
    // Random-bit branch: t1 has nothing about the state and outputs I/2.
    Mat noise = Channel::prepare(gates::I() * 0.5, 2).apply(in);
    return r.op() * 0.75 + noise * 0.25;
}

double xqc_success(const Mat &in, unsigned b, bool averaged) {
    check_bits(b, 1, "b");
    RegisterMap r;
    r.add(uc_clone().apply(in), {"Q1", "Q2"});
    r.add(Mat::unit(2, b, b), {"Q3"});
    r.apply(cx_from_key(), {"Q2", "Q3"}, {"Q5"});
    r.apply(uc_marginal(0), {"Q5"}, {"Q6"});
    double p = xor_success(r.marginal({"Q1", "Q6"}), Basis::Z, b);
    if (!averaged) {
        return p;
    }
    // s1 sends a uniform bit r to s0 and t2; s0 forwards r xor b; t0 copies.
    RegisterMap q;
    q.add(classical_copy().apply(gates::I() * 0.5), {"Q1", "Q2"});
    q.add(Mat::unit(2, b, b), {"Q3"});
    q.apply(cx_from_key(), {"Q2", "Q3"}, {"Q5"});
    q.apply(classical_copy(), {"Q5"}, {"Q6", "Q7"});
    double pr = xor_success(q.marginal({"Q1", "Q6"}), Basis::Z, b);
    return 0.75 * p + 0.25 * pr;
}

Mat xq3_sink(unsigned j, const Mat &in1, const Mat &in2, const Mat &in3) {
    const Channel &gr = gr_ttr_channel();
    RegisterMap r;
    switch (j) {
        case 0:
            r.add(uc_marginal(0).apply(in1), {"D1"});
            r.add(three_share_source(in2, "c"), {"K2", "c2"});
            r.add(three_share_source(in3, "c"), {"K3", "c3"});
            r.apply(gr, {"D1", "K2"}, {"E"});
            r.apply(gr, {"E", "K3"}, {"E'"});
            r.apply(uc_marginal(0), {"E'"}, {"F1"});
            r.apply(gr, {"F1", "c2"}, {"G"});
            r.apply(gr, {"G", "c3"}, {"out"});
            return r.op();
        case 1:
            r.add(three_share_source(in1, "c"), {"D1", "T2"});
            r.add(uc_marginal(0).apply(in2), {"K2"});
            r.add(three_share_source(in3, "d"), {"K3", "d3"});
            r.apply(gr, {"D1", "K2"}, {"E"});
            r.apply(gr, {"E", "K3"}, {"E'"});
            r.apply(uc_marginal(1), {"E'"}, {"G"});
            r.apply(uc_marginal(0), {"G"}, {"F2"});
            r.apply(gr, {"F2", "d3"}, {"H"});
            r.apply(bm_channel(), {"T2", "H"}, {"out"});
            return r.op();
        case 2:
            r.add(three_share_source(in1, "d"), {"D1", "T3"});
            r.add(three_share_source(in2, "d"), {"K2", "d2"});
            r.add(uc_marginal(0).apply(in3), {"K3"});
            r.apply(gr, {"D1", "K2"}, {"E"});
            r.apply(gr, {"E", "K3"}, {"E'"});
            r.apply(uc_marginal(1), {"E'"}, {"G"});
            r.apply(uc_marginal(1), {"G"}, {"F3"});
            r.apply(gr, {"F3", "d2"}, {"H"});
            r.apply(bm_channel(), {"T3", "H"}, {"out"});
            return r.op();
        default:
            throw UsageError("XQ^3 has sinks 0..2");
    }
}

}  // namespace linear

XqqOutputs run_xqq(const PureState &psi1, const PureState &psi2) {
    if (psi1.nqubits() != 1 || psi2.nqubits() != 1) {
        throw UsageError("run_xqq: one-qubit sources required");
    }
    return {DensityOp(linear::xqq_sink1(psi1.projector(), psi2.projector())),
            DensityOp(linear::xqq_sink2(psi1.projector(), psi2.projector()))};
}

XqcOutputs run_xqc(const PureState &psi, unsigned b, bool averaged) {
    if (psi.nqubits() != 1) {
        throw UsageError("run_xqc: one-qubit source required");
    }
    return {DensityOp(linear::xqc_sink1(psi.projector(), b, averaged)),
            linear::xqc_success(psi.projector(), b, averaged)};
}

namespace {

struct QraCode {
    unsigned width;
    PureState (*state)(unsigned);
    const Channel &(*encode)();
    const Channel &(*copy)();
};

const Channel &pc_ref() {
    static const Channel c = pc_clone();
    return c;
}

const Channel &uc_ref() {
    static const Channel c = uc_clone();
    return c;
}

const QraCode kX2{2, qra2_state, gr_mm2, pc_ref};
const QraCode kX3{3, qra3_state, ag_mm3, uc_ref};

std::pair<double, double> run_qra_butterfly(const QraCode &code, unsigned x, unsigned y, unsigned i1, unsigned i2) {
    check_bits(x, code.width, "x");
    check_bits(y, code.width, "y");
    check_index(i1, code.width);
    check_index(i2, code.width);
    Mat px = code.state(x).projector(), py = code.state(y).projector();

    RegisterMap t1;
    t1.add(px, {"Q2"});
    t1.add(py, {"Q3"});
    t1.add(py, {"Q4"});
    t1.apply(code.encode(), {"Q2", "Q3"}, {"Q5"});
    t1.apply(code.copy(), {"Q5"}, {"Q6", "Q7"});
    double p1 = xor_success(t1.marginal({"Q4", "Q7"}), decode_basis(i1), bit_of(x, code.width, i1));

    RegisterMap t2;
    t2.add(px, {"Q1"});
    t2.add(px, {"Q2"});
    t2.add(py, {"Q3"});
    t2.apply(code.encode(), {"Q2", "Q3"}, {"Q5"});
    t2.apply(code.copy(), {"Q5"}, {"Q6", "Q7"});
    double p2 = xor_success(t2.marginal({"Q1", "Q6"}), decode_basis(i2), bit_of(y, code.width, i2));
    return {p1, p2};
}

Mat q5_state(const QraCode &code, unsigned x, unsigned y) {
    check_bits(x, code.width, "x");
    check_bits(y, code.width, "y");
    RegisterMap r;
    r.add(code.state(x).projector(), {"Q2"});
    r.add(code.state(y).projector(), {"Q3"});
    r.apply(code.encode(), {"Q2", "Q3"}, {"Q5"});
    return r.op();
}

double q6_decode(const QraCode &code, unsigned x, unsigned y, unsigned j) {
    check_index(j, code.width);
    Mat q6 = partial_trace(code.copy().apply(q5_state(code, x, y)), std::vector<size_t>{0});
    unsigned target = bit_of(x ^ y, code.width, j);
    return fidelity_pure(basis_state(decode_basis(j), target), q6);
}

}  // namespace

std::pair<double, double> run_x2c2c(unsigned x, unsigned y, unsigned i1, unsigned i2) {
    return run_qra_butterfly(kX2, x, y, i1, i2);
}

std::pair<double, double> run_x3c3c(unsigned x, unsigned y, unsigned i1, unsigned i2) {
    return run_qra_butterfly(kX3, x, y, i1, i2);
}

double x2c2c_q6_decode(unsigned x, unsigned y, unsigned j) {
    return q6_decode(kX2, x, y, j);
}

double x3c3c_q6_decode(unsigned x, unsigned y, unsigned j) {
    return q6_decode(kX3, x, y, j);
}

DensityOp x3c3c_q5_state(unsigned x, unsigned y) {
    return DensityOp(q5_state(kX3, x, y));
}

std::pair<unsigned, unsigned> run_classical_butterfly(unsigned x, unsigned y) {
    check_bits(x, 1, "x");
    check_bits(y, 1, "y");
    unsigned s0 = x ^ y;
    unsigned t0a = s0, t0b = s0;
    return {t0a ^ y, t0b ^ x};
}

std::vector<double> run_xqk(unsigned k, const std::vector<PureState> &states) {
    if (k != 2 && k != 3) {
        throw UsageError("XQ^k is supported for k = 2 and 3 only");
    }
    if (states.size() != k) {
        throw UsageError("run_xqk: need one state per source");
    }
    for (const auto &s : states) {
        if (s.nqubits() != 1) {
            throw UsageError("run_xqk: one-qubit sources required");
        }
    }
    if (k == 2) {
        auto out = run_xqq(states[0], states[1]);
        return {fidelity_pure(states[0], out.rho1), fidelity_pure(states[1], out.rho2)};
    }
    std::vector<double> f;
    for (unsigned j = 0; j < 3; j++) {
        DensityOp out(
            linear::xq3_sink(j, states[0].projector(), states[1].projector(), states[2].projector()));
        f.push_back(fidelity_pure(states[j], out));
    }
    return f;
}

namespace xqq_stages {

Channel c2(const Mat &rho2) {
    return bind_last(gr_ttr_channel(), uc_marginal(0).apply(rho2));
}

Channel c3() {
    return uc_marginal(0);
}

Channel c4c2(const Mat &rho2) {
    return Channel::from_action(2, 2, [&](const Mat &rho) {
        RegisterMap r;
        r.add(rho, {"Q2"});
        r.add(uc_clone().apply(rho2), {"Q3", "Q4"});
        r.apply(gr_ttr_channel(), {"Q2", "Q3"}, {"Q5"});
        r.apply(gr_ttr_channel(), {"Q5", "Q4"}, {"out"});
        return r.op();
    });
}

Channel d2(const Mat &rho1) {
    return bind_first(gr_ttr_channel(), uc_marginal(1).apply(rho1));
}

Channel d3() {
    return uc_marginal(0);
}

Channel d4d2(const Mat &rho1) {
    return Channel::from_action(2, 2, [&](const Mat &rho) {
        RegisterMap r;
        r.add(uc_clone().apply(rho1), {"Q1", "Q2"});
        r.add(rho, {"Q3"});
        r.apply(gr_ttr_channel(), {"Q2", "Q3"}, {"Q5"});
        r.apply(bm_channel(), {"Q1", "Q5"}, {"out"});
        return r.op();
    });
}

Channel s1t1(const Mat &rho2) {
    return Channel::from_action(2, 2, [&](const Mat &rho) { return linear::xqq_sink1(rho, rho2); });
}

Channel s2t2(const Mat &rho1) {
    return Channel::from_action(2, 2, [&](const Mat &rho) { return linear::xqq_sink2(rho1, rho); });
}

}  // namespace xqq_stages

}  // namespace qnc
