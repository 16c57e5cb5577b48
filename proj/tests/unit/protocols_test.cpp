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

#include "gtest/gtest.h"
#include "qnc/protocols.hpp"
#include "qnc/random.hpp"

using namespace qnc;

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);

// Frozen from the numpy oracle.
const double kXqqT1 = 0.5 + 2.0 / 81;
const double kXqqT2 = 0.5 + 2 * kS3 / 243;
const double kX2 = 0.5 + kS2 / 16;
const double kX3 = 0.5 + 2.0 / 81;
const double kXq3F1 = 0.501219326322206;
const double kXq3F23 = 0.500469318920237;

ProtocolInput quantum_pair(const PureState &a, const PureState &b) {
    return {{a, b}};
}

}  // namespace

TEST(Register, AddApplyMarginal) {
    RegisterMap r;
    r.add(PureState::basis(1, 1).projector(), {"a"});
    r.add(PureState::basis(1, 0).projector(), {"b"});
    r.apply(Channel::unitary(gates::X()), {"b"}, {"c"});
    EXPECT_EQ(r.names(), (std::vector<std::string>{"c", "a"}));
    EXPECT_LT(max_abs_diff(r.marginal({"a", "c"}), PureState::basis(2, 3).projector()), 1e-14);
    EXPECT_THROW(r.slot("b"), UsageError);
    EXPECT_THROW(r.add(Mat::identity(2), {"a"}), UsageError);
}

TEST(Register, FiveQubitCap) {
    RegisterMap r;
    r.add(Mat::identity(16) * (1.0 / 16), {"a", "b", "c", "d"});
    r.add(Mat::identity(2) * 0.5, {"e"});
    EXPECT_THROW(r.add(Mat::identity(2) * 0.5, {"f"}), UsageError);
}

TEST(Protocols, NamesRoundTrip) {
    for (auto id : {ProtocolId::xqq, ProtocolId::xqc, ProtocolId::x2c2c, ProtocolId::x3c3c, ProtocolId::classical,
                    ProtocolId::xq3}) {
        EXPECT_EQ(parse_protocol(protocol_name(id)), id);
    }
    EXPECT_THROW(parse_protocol("xyz"), UsageError);
}

TEST(Xqq, ConstantFidelities) {
    Rng rng(7, 1);
    for (int k = 0; k < 200; k++) {
        auto a = random_pure_state(rng), b = random_pure_state(rng);
        auto v = exact_values(ProtocolId::xqq, quantum_pair(a, b));
        EXPECT_NEAR(v[0].value, kXqqT1, 1e-10);
        EXPECT_NEAR(v[1].value, kXqqT2, 1e-10);
        auto out = run_xqq(a, b);
        EXPECT_NEAR(out.rho1.mat().trace().real(), 1, 1e-10);
        EXPECT_NEAR(out.rho2.mat().trace().real(), 1, 1e-10);
    }
}

TEST(Xqq, AboveHalfOnBasisStates) {
    for (unsigned x = 0; x < 2; x++) {
        for (unsigned y = 0; y < 2; y++) {
            auto v = exact_values(ProtocolId::xqq, quantum_pair(PureState::basis(1, x), PureState::basis(1, y)));
            EXPECT_GT(v[0].value, 0.5);
            EXPECT_GT(v[1].value, 0.5);
        }
    }
}

TEST(Xqq, SinkMapsAreDepolarizing) {
    Rng rng(9, 1);
    auto b = random_pure_state(rng);
    for (int k = 0; k < 20; k++) {
        auto a = random_pure_state(rng);
        Mat got = linear::xqq_sink1(a.projector(), b.projector());
        Mat want = depolarize(ShrinkFactor(4.0 / 81)).apply(a.projector());
        EXPECT_LT(max_abs_diff(got, want), 1e-10);
    }
}

TEST(Xqc, Values) {
    Rng rng(3, 1);
    for (int k = 0; k < 50; k++) {
        auto a = random_pure_state(rng);
        for (unsigned b = 0; b < 2; b++) {
            ProtocolInput in{{a, Bits{b, 1}}};
            auto v = exact_values(ProtocolId::xqc, in);
            EXPECT_NEAR(v[0].value, 13.0 / 18, 1e-10);
            EXPECT_NEAR(v[1].value, 11.0 / 18, 1e-10);
            EXPECT_EQ(v[1].kind, ValueKind::success_probability);
            in.averaged = true;
            v = exact_values(ProtocolId::xqc, in);
            EXPECT_NEAR(v[0].value, 2.0 / 3, 1e-10);
            EXPECT_NEAR(v[1].value, 17.0 / 24, 1e-10);
        }
    }
}

TEST(Xqc, T1IsDepolarizing) {
    Rng rng(4, 1);
    for (unsigned b = 0; b < 2; b++) {
        for (int k = 0; k < 10; k++) {
            auto a = random_pure_state(rng);
            Mat got = linear::xqc_sink1(a.projector(), b, false);
            EXPECT_LT(max_abs_diff(got, depolarize(ShrinkFactor(4.0 / 9)).apply(a.projector())), 1e-10);
            got = linear::xqc_sink1(a.projector(), b, true);
            EXPECT_LT(max_abs_diff(got, depolarize(ShrinkFactor(1.0 / 3)).apply(a.projector())), 1e-10);
        }
    }
}

TEST(X2c2c, AllInputs) {
    for (unsigned x = 0; x < 4; x++) {
        for (unsigned y = 0; y < 4; y++) {
            for (unsigned i1 = 1; i1 <= 2; i1++) {
                for (unsigned i2 = 1; i2 <= 2; i2++) {
                    auto [p1, p2] = run_x2c2c(x, y, i1, i2);
                    EXPECT_NEAR(p1, kX2, 1e-10) << x << y << i1 << i2;
                    EXPECT_NEAR(p2, kX2, 1e-10) << x << y << i1 << i2;
                }
            }
            for (unsigned j = 1; j <= 2; j++) {
                EXPECT_NEAR(x2c2c_q6_decode(x, y, j), 5.0 / 8, 1e-10);
            }
        }
    }
}

TEST(X3c3c, AllInputs) {
    for (unsigned x = 0; x < 8; x++) {
        for (unsigned y = 0; y < 8; y++) {
            for (unsigned i1 = 1; i1 <= 3; i1++) {
                for (unsigned i2 = 1; i2 <= 3; i2++) {
                    auto [p1, p2] = run_x3c3c(x, y, i1, i2);
                    EXPECT_NEAR(p1, kX3, 1e-10) << x << y << i1 << i2;
                    EXPECT_NEAR(p2, kX3, 1e-10) << x << y << i1 << i2;
                }
            }
            for (unsigned j = 1; j <= 3; j++) {
                EXPECT_NEAR(x3c3c_q6_decode(x, y, j), 0.5 + 2 * kS3 / 81, 1e-10);
            }
            EXPECT_NEAR(x3c3c_q5_state(x, y).mat().trace().real(), 1, 1e-10);
        }
    }
}

TEST(X3c3c, RejectsBadInput) {
    ProtocolInput in{{Bits{8, 3}, Bits{0, 3}}};
    EXPECT_THROW(exact_values(ProtocolId::x3c3c, in), UsageError);
    in = {{Bits{1, 2}, Bits{0, 3}}};
    EXPECT_THROW(exact_values(ProtocolId::x3c3c, in), UsageError);
    in = {{Bits{1, 3}}};
    EXPECT_THROW(exact_values(ProtocolId::x3c3c, in), UsageError);
}

TEST(Classical, ButterflyIsPerfect) {
    for (unsigned x = 0; x < 2; x++) {
        for (unsigned y = 0; y < 2; y++) {
            auto [o1, o2] = run_classical_butterfly(x, y);
            EXPECT_EQ(o1, x);
            EXPECT_EQ(o2, y);
        }
    }
}

TEST(Xqk, TwoMatchesXqq) {
    Rng rng(5, 1);
    auto a = random_pure_state(rng), b = random_pure_state(rng);
    auto f = run_xqk(2, {a, b});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_NEAR(f[0], kXqqT1, 1e-10);
    EXPECT_NEAR(f[1], kXqqT2, 1e-10);
}

TEST(Xqk, ThreeSources) {
    Rng rng(6, 1);
    for (int k = 0; k < 10; k++) {
        auto a = random_pure_state(rng), b = random_pure_state(rng), c = random_pure_state(rng);
        auto v = exact_values(ProtocolId::xq3, {{a, b, c}});
        ASSERT_EQ(v.size(), 3u);
        EXPECT_NEAR(v[0].value, kXq3F1, 1e-10);
        EXPECT_NEAR(v[1].value, kXq3F23, 1e-10);
        EXPECT_NEAR(v[2].value, kXq3F23, 1e-10);
    }
    EXPECT_THROW(run_xqk(4, {}), UsageError);
}

TEST(Sampler, XqqWithinFourSigma) {
    Rng rng(11, 1);
    ProtocolInput in = quantum_pair(random_pure_state(rng), random_pure_state(rng));
    auto st = sample(ProtocolId::xqq, in, 20000, 42);
    EXPECT_LT(std::abs(st.frequency[0] - kXqqT1), 4 * st.standard_error[0]);
    EXPECT_LT(std::abs(st.frequency[1] - kXqqT2), 4 * st.standard_error[1]);
}

TEST(Sampler, XqcWithinFourSigma) {
    Rng rng(12, 1);
    for (bool avg : {false, true}) {
        ProtocolInput in{{random_pure_state(rng), Bits{1, 1}}};
        in.averaged = avg;
        auto exact = exact_values(ProtocolId::xqc, in);
        auto st = sample(ProtocolId::xqc, in, 20000, 43);
        for (size_t k = 0; k < 2; k++) {
            EXPECT_LT(std::abs(st.frequency[k] - exact[k].value), 4 * st.standard_error[k]) << avg << k;
        }
    }
}

TEST(Sampler, QraWithinFourSigma) {
    for (auto id : {ProtocolId::x2c2c, ProtocolId::x3c3c}) {
        unsigned w = id == ProtocolId::x2c2c ? 2 : 3;
        ProtocolInput in{{Bits{1, w}, Bits{w == 2 ? 2u : 6u, w}}, w, 2};
        auto exact = exact_values(id, in);
        auto st = sample(id, in, 20000, 44);
        for (size_t k = 0; k < 2; k++) {
            EXPECT_LT(std::abs(st.frequency[k] - exact[k].value), 4 * st.standard_error[k]);
        }
    }
}

TEST(Sampler, DeterministicAndValidated) {
    ProtocolInput in = quantum_pair(PureState::basis(1, 0), PureState::basis(1, 1));
    auto a = sample(ProtocolId::xqq, in, 500, 99);
    auto b = sample(ProtocolId::xqq, in, 500, 99);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_THROW(sample(ProtocolId::xqq, in, 0, 1), UsageError);
    EXPECT_THROW(sample(ProtocolId::xq3, {{PureState::basis(1, 0), PureState::basis(1, 0), PureState::basis(1, 0)}},
                        10, 1),
                 UsageError);
    auto c = sample(ProtocolId::classical, {{Bits{1, 1}, Bits{0, 1}}}, 10, 1);
    EXPECT_EQ(c.successes, (std::vector<uint64_t>{10, 10}));
}
