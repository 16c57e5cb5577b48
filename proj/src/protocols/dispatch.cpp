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

#include "qnc/protocols.hpp"

namespace qnc {

namespace {
struct NamedProtocol {
    ProtocolId id;
    std::string_view name;
};
constexpr std::array<NamedProtocol, 6> kProtocols = {{{ProtocolId::xqq, "xqq"},
                                                      {ProtocolId::xqc, "xqc"},
                                                      {ProtocolId::x2c2c, "x2c2c"},
                                                      {ProtocolId::x3c3c, "x3c3c"},
                                                      {ProtocolId::classical, "classical"},
                                                      {ProtocolId::xq3, "xq3"}}};

const PureState &quantum(const ProtocolInput &in, size_t k) {
    const auto *p = std::get_if<PureState>(&in.sources.at(k));
    if (!p || p->nqubits() != 1) {
        throw UsageError("source " + std::to_string(k + 1) + " must be a one-qubit state");
    }
    return *p;
}

unsigned classical(const ProtocolInput &in, size_t k, unsigned width) {
    const auto *b = std::get_if<Bits>(&in.sources.at(k));
    if (!b || b->width != width || b->value >= (1u << width)) {
        throw UsageError("source " + std::to_string(k + 1) + " must be a " + std::to_string(width) + "-bit word");
    }
    return b->value;
}

void expect_sources(const ProtocolInput &in, size_t n) {
    if (in.sources.size() != n) {
        throw UsageError("protocol expects " + std::to_string(n) + " sources");
    }
}
}  // namespace

std::string_view protocol_name(ProtocolId id) {
    for (const auto &p : kProtocols) {
        if (p.id == id) {
            return p.name;
        }
    }
    throw UsageError("unknown protocol id");
}

ProtocolId parse_protocol(std::string_view name) {
    for (const auto &p : kProtocols) {
        if (p.name == name) {
            return p.id;
        }
    }
    throw UsageError("unknown protocol '" + std::string(name) + "'");
}

std::string_view value_kind_name(ValueKind k) {
    return k == ValueKind::fidelity ? "fidelity" : "success_probability";
}

std::vector<SinkValue> exact_values(ProtocolId id, const ProtocolInput &in) {
    const auto F = ValueKind::fidelity;
    const auto P = ValueKind::success_probability;
    switch (id) {
        case ProtocolId::xqq: {
            expect_sources(in, 2);
            const auto &a = quantum(in, 0);
            const auto &b = quantum(in, 1);
            auto out = run_xqq(a, b);
            return {{"t1", F, fidelity_pure(a, out.rho1)}, {"t2", F, fidelity_pure(b, out.rho2)}};
        }
        case ProtocolId::xqc: {
            expect_sources(in, 2);
            const auto &a = quantum(in, 0);
            auto out = run_xqc(a, classical(in, 1, 1), in.averaged);
            return {{"t1", F, fidelity_pure(a, out.rho1)}, {"t2", P, out.p_success_t2}};
        }
        case ProtocolId::x2c2c:
        case ProtocolId::x3c3c: {
            expect_sources(in, 2);
            unsigned w = id == ProtocolId::x2c2c ? 2 : 3;
            auto run = id == ProtocolId::x2c2c ? run_x2c2c : run_x3c3c;
            auto [p1, p2] = run(classical(in, 0, w), classical(in, 1, w), in.i1, in.i2);
            return {{"t1", P, p1}, {"t2", P, p2}};
        }
        case ProtocolId::classical: {
            expect_sources(in, 2);
            unsigned x = classical(in, 0, 1), y = classical(in, 1, 1);
            auto [o1, o2] = run_classical_butterfly(x, y);
            return {{"t1", P, o1 == x ? 1.0 : 0.0}, {"t2", P, o2 == y ? 1.0 : 0.0}};
        }
        case ProtocolId::xq3: {
            expect_sources(in, 3);
            auto f = run_xqk(3, {quantum(in, 0), quantum(in, 1), quantum(in, 2)});
            return {{"t1", F, f[0]}, {"t2", F, f[1]}, {"t3", F, f[2]}};
        }
    }
    throw UsageError("unknown protocol id");
}

}  // namespace qnc
