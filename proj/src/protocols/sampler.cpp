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

#include <algorithm>
#include <array>
#include <cmath>

#include "protocols_internal.hpp"
#include "qnc/protocols.hpp"
#include "qnc/random.hpp"

namespace qnc {

using namespace internal;

namespace {

// Pure state over named qubits; every operation picks one Kraus branch.
class Trajectory {
   public:
    explicit Trajectory(Rng &rng) : rng_(rng) {}

    void add(std::span<const cplx> amps, std::vector<std::string> names) {
        psi_ = psi_.empty() ? std::vector<cplx>(amps.begin(), amps.end()) : kron(psi_, amps);
        names_.insert(names_.end(), names.begin(), names.end());
    }

    size_t apply(const std::vector<Mat> &kraus, const std::vector<std::string> &in, std::vector<std::string> out) {
        size_t n = names_.size();
        std::vector<size_t> order;
        for (const auto &name : in) {
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                throw UsageError("trajectory: no live register " + name);
            }
            order.push_back(static_cast<size_t>(it - names_.begin()));
        }
        std::vector<std::string> rest;
        for (size_t q = 0; q < n; q++) {
            if (std::find(order.begin(), order.end(), q) == order.end()) {
                order.push_back(q);
                rest.push_back(names_[q]);
            }
        }
        std::vector<cplx> moved = permute(order);
        size_t din = size_t{1} << in.size();
        size_t drest = moved.size() / din;

        std::vector<std::vector<cplx>> branch;
        std::vector<double> prob;
        for (const auto &K : kraus) {
            std::vector<cplx> phi(K.rows() * drest);
            for (size_t a = 0; a < K.rows(); a++) {
                for (size_t r = 0; r < drest; r++) {
                    cplx s = 0;
                    for (size_t i = 0; i < din; i++) {
                        s += K(a, i) * moved[i * drest + r];
                    }
                    phi[a * drest + r] = s;
                }
            }
            double p = 0;
            for (auto v : phi) {
                p += std::norm(v);
            }
            branch.push_back(std::move(phi));
            prob.push_back(p);
        }
        size_t pick = choose(prob);
        double scale = 1 / std::sqrt(prob[pick]);
        psi_ = std::move(branch[pick]);
        for (auto &v : psi_) {
            v *= scale;
        }
        out.insert(out.end(), rest.begin(), rest.end());
        names_ = std::move(out);
        return pick;
    }

    size_t measure(const std::vector<Mat> &bras, const std::vector<std::string> &in) {
        return apply(bras, in, {});
    }

    unsigned uniform_bit() { return rng_.uniform() < 0.5 ? 0 : 1; }
    double uniform() { return rng_.uniform(); }

   private:
    std::vector<cplx> permute(const std::vector<size_t> &order) const {
        size_t n = order.size();
        bool same = true;
        for (size_t k = 0; k < n; k++) {
            same &= order[k] == k;
        }
        if (same) {
            return psi_;
        }
        std::vector<cplx> out(psi_.size());
        for (size_t idx = 0; idx < psi_.size(); idx++) {
            size_t src = 0;
            for (size_t k = 0; k < n; k++) {
                if ((idx >> (n - 1 - k)) & 1) {
                    src |= size_t{1} << (n - 1 - order[k]);
                }
            }
            out[idx] = psi_[src];
        }
        return out;
    }

    size_t choose(const std::vector<double> &prob) {
        double total = 0;
        for (double p : prob) {
            total += p;
        }
        double u = rng_.uniform() * total;
        double acc = 0;
        size_t last = 0;
        for (size_t k = 0; k < prob.size(); k++) {
            if (prob[k] <= 0) {
                continue;
            }
            acc += prob[k];
            last = k;
            if (u < acc) {
                return k;
            }
        }
        return last;
    }

    Rng &rng_;
    std::vector<cplx> psi_;
    std::vector<std::string> names_;
};

Mat bra(const PureState &s, double scale = 1) {
    Mat m(1, s.dim());
    for (size_t k = 0; k < s.dim(); k++) {
        m(0, k) = std::conj(s.amps()[k]) * scale;
    }
    return m;
}

std::vector<Mat> bras_of(const std::vector<PureState> &states, double scale) {
    std::vector<Mat> out;
    for (const auto &s : states) {
        out.push_back(bra(s, scale));
    }
    return out;
}

const std::vector<Mat> &ttr_bras() {
    static const std::vector<Mat> b = [] {
        std::vector<PureState> s;
        for (unsigned r = 0; r < 4; r++) {
            s.push_back(tetra_state(r));
        }
        return bras_of(s, 1 / std::sqrt(2.0));
    }();
    return b;
}

const std::vector<Mat> &bell_bras() {
    static const std::vector<Mat> b = [] {
        std::vector<PureState> s;
        for (unsigned k = 0; k < 4; k++) {
            s.push_back(bell_state(k));
        }
        return bras_of(s, 1);
    }();
    return b;
}

std::vector<Mat> basis_bras(Basis b) {
    return bras_of({basis_state(b, 0), basis_state(b, 1)}, 1);
}

bool passes_fidelity_test(Trajectory &t, const std::string &name, const PureState &psi) {
    return t.measure(bras_of({psi, psi.perp()}, 1), {name}) == 0;
}

unsigned measure_bit(Trajectory &t, const std::string &name, Basis b) {
    return static_cast<unsigned>(t.measure(basis_bras(b), {name}));
}

// Branch chosen by a fair three-way draw, then a Bell measurement and a preparation.
void bell_measure_and_prepare(Trajectory &t, const std::string &a, const std::string &b, const std::string &out) {
    double u = t.uniform();
    unsigned branch = u < 1.0 / 3 ? 0 : (u < 2.0 / 3 ? 1 : 2);
    size_t k = t.measure(bell_bras(), {a, b});
    // Kraus k is |out_k><Bell_k|.
    Mat prepared = bm_branch(branch).kraus()[k];
    std::vector<cplx> amps = prepared * bell_state(static_cast<unsigned>(k)).amps();
    t.add(amps, {out});
}

std::array<bool, 2> shot_xqq(Rng &rng, const PureState &p1, const PureState &p2) {
    Trajectory t(rng);
    const std::vector<Mat> uc = uc_clone().kraus();
    t.add(p1.amps(), {"S1"});
    t.apply(uc, {"S1"}, {"Q1", "Q2"});
    t.add(p2.amps(), {"S2"});
    t.apply(uc, {"S2"}, {"Q3", "Q4"});
    size_t key = t.measure(ttr_bras(), {"Q3"});
    t.apply({gr_unitary(static_cast<unsigned>(key))}, {"Q2"}, {"Q5"});
    t.apply(uc, {"Q5"}, {"Q6", "Q7"});
    size_t key1 = t.measure(ttr_bras(), {"Q4"});
    t.apply({gr_unitary(static_cast<unsigned>(key1))}, {"Q7"}, {"out1"});
    bool ok1 = passes_fidelity_test(t, "out1", p1);
    bell_measure_and_prepare(t, "Q1", "Q6", "out2");
    bool ok2 = passes_fidelity_test(t, "out2", p2);
    return {ok1, ok2};
}

std::array<bool, 2> shot_xqc(Rng &rng, const PureState &psi, unsigned b, bool averaged) {
    Trajectory t(rng);
    if (averaged && t.uniform() < 0.25) {
        // Random-bit branch: t2 learns b exactly, t1 holds a maximally mixed qubit.
        unsigned r = t.uniform_bit();
        unsigned q5 = r ^ b;
        unsigned out2 = r ^ q5;
        t.add(PureState::basis(1, t.uniform_bit()).amps(), {"out1"});
        return {passes_fidelity_test(t, "out1", psi), out2 == b};
    }
    const std::vector<Mat> uc = uc_clone().kraus();
    const Mat &xb = b ? gates::X() : gates::I();
    t.add(psi.amps(), {"S1"});
    t.apply(uc, {"S1"}, {"Q1", "Q2"});
    t.apply({xb}, {"Q2"}, {"Q5"});
    t.apply(uc, {"Q5"}, {"Q6", "Q7"});
    t.apply({xb}, {"Q7"}, {"out1"});
    bool ok1 = passes_fidelity_test(t, "out1", psi);
    unsigned m1 = measure_bit(t, "Q1", Basis::Z);
    unsigned m6 = measure_bit(t, "Q6", Basis::Z);
    return {ok1, (m1 ^ m6) == b};
}

std::array<bool, 2> shot_qra(Rng &rng, bool three, unsigned x, unsigned y, unsigned i1, unsigned i2) {
    Trajectory t(rng);
    unsigned w = three ? 3 : 2;
    auto state = three ? qra3_state : qra2_state;
    PureState px = state(x), py = state(y);
    t.add(px.amps(), {"Q1"});
    t.add(px.amps(), {"Q2"});
    t.add(py.amps(), {"Q3"});
    t.add(py.amps(), {"Q4"});
    std::vector<PureState> code;
    for (unsigned z = 0; z < (1u << w); z++) {
        code.push_back(state(z));
    }
    auto key = static_cast<unsigned>(t.measure(bras_of(code, three ? 0.5 : 1 / std::sqrt(2.0)), {"Q3"}));
    if (!three) {
        t.apply({gr_unitary(key)}, {"Q2"}, {"Q5"});
        t.apply(pc_clone().kraus(), {"Q5"}, {"Q6", "Q7"});
    } else {
        static const std::array<unsigned, 4> group = {0b000, 0b011, 0b101, 0b110};
        bool in_group = std::find(group.begin(), group.end(), key) != group.end();
        Channel g = ag_channel(in_group ? key : key ^ 0b111u);
        t.apply(g.kraus(), {"Q2"}, {"Q5a"});
        t.apply(in_group ? std::vector<Mat>{gates::I()} : inv_prime_channel().kraus(), {"Q5a"}, {"Q5"});
        t.apply(uc_clone().kraus(), {"Q5"}, {"Q6", "Q7"});
    }
    unsigned u4 = measure_bit(t, "Q4", decode_basis(i1));
    unsigned u7 = measure_bit(t, "Q7", decode_basis(i1));
    unsigned u1 = measure_bit(t, "Q1", decode_basis(i2));
    unsigned u6 = measure_bit(t, "Q6", decode_basis(i2));
    return {(u4 ^ u7) == bit_of(x, w, i1), (u1 ^ u6) == bit_of(y, w, i2)};
}

}  // namespace

TrajectoryStats sample(ProtocolId id, const ProtocolInput &input, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw UsageError("sample: shots must be at least 1");
    }
    // Validates the input shape and names the sinks.
    std::vector<SinkValue> exact = exact_values(id, input);
    if (id == ProtocolId::xq3) {
        throw UsageError("sample: xq3 is not supported by the trajectory sampler");
    }
    Rng rng(seed, 0);
    std::array<uint64_t, 2> hits = {0, 0};
    for (uint64_t s = 0; s < shots; s++) {
        std::array<bool, 2> ok{};
        switch (id) {
            case ProtocolId::xqq:
                ok = shot_xqq(rng, std::get<PureState>(input.sources[0]), std::get<PureState>(input.sources[1]));
                break;
            case ProtocolId::xqc:
                ok = shot_xqc(rng, std::get<PureState>(input.sources[0]), std::get<Bits>(input.sources[1]).value,
                              input.averaged);
                break;
            case ProtocolId::x2c2c:
            case ProtocolId::x3c3c:
                ok = shot_qra(rng, id == ProtocolId::x3c3c, std::get<Bits>(input.sources[0]).value,
                              std::get<Bits>(input.sources[1]).value, input.i1, input.i2);
                break;
            case ProtocolId::classical: {
                unsigned x = std::get<Bits>(input.sources[0]).value, y = std::get<Bits>(input.sources[1]).value;
                auto [o1, o2] = run_classical_butterfly(x, y);
                ok = {o1 == x, o2 == y};
                break;
            }
            case ProtocolId::xq3:
                break;
        }
        hits[0] += ok[0];
        hits[1] += ok[1];
    }
    TrajectoryStats st{shots, seed, {}, {}, {}, {}};
    for (size_t k = 0; k < 2; k++) {
        double f = static_cast<double>(hits[k]) / static_cast<double>(shots);
        st.sinks.push_back(exact[k].sink);
        st.successes.push_back(hits[k]);
        st.frequency.push_back(f);
        st.standard_error.push_back(std::sqrt(f * (1 - f) / static_cast<double>(shots)));
    }
    return st;
}

}  // namespace qnc
