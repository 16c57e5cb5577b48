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
#include <numbers>

#include "gtest/gtest.h"
#include "qnc/analysis.hpp"
#include "qnc/random.hpp"

using namespace qnc;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST(Superop, IdentityAndDepolarize) {
    Superop id = tomography(Channel::identity(2));
    EXPECT_LT(max_abs_diff(id.mat(), Mat::identity(4)), 1e-15);
    Superop zero = tomography(depolarize(ShrinkFactor(0)));
    Rng rng(1, 2);
    for (int k = 0; k < 10; k++) {
        Mat r = random_density(rng, 1).mat();
        EXPECT_LT(max_abs_diff(zero.apply(r), gates::I() * 0.5), 1e-14);
    }
    Superop c = compose(tomography(depolarize(ShrinkFactor(2.0 / 3))), tomography(depolarize(ShrinkFactor(2.0 / 3))));
    EXPECT_LT(frobenius_distance(c, tomography(depolarize(ShrinkFactor(4.0 / 9)))), 1e-14);
}

TEST(Superop, RoundTripThroughChannel) {
    Rng rng(2, 2);
    for (int k = 0; k < 20; k++) {
        Superop s = tomography(random_channel(rng, 2, k % 2 ? 4 : 2));
        EXPECT_LT(frobenius_distance(tomography(channel_from_superop(s)), s), 1e-12);
    }
}

TEST(DetectShrink, RandomFactors) {
    Rng rng(3, 2);
    for (int k = 0; k < 100; k++) {
        double p = rng.uniform();
        auto got = detect_shrink(tomography(depolarize(ShrinkFactor(p))));
        ASSERT_TRUE(got.has_value());
        EXPECT_NEAR(*got, p, 1e-12);
    }
    EXPECT_FALSE(detect_shrink(tomography(Channel::prepare(PureState::basis(1, 0).projector(), 2))).has_value());
    EXPECT_FALSE(detect_shrink(tomography(Channel::unitary(gates::X()))).has_value());
}

TEST(DetectShrink, XqqInducedMaps) {
    Rng rng(4, 2);
    for (int k = 0; k < 4; k++) {
        Mat rho2 = random_pure_state(rng).projector();
        auto main = detect_shrink(tomography(xqq_stages::c4c2(rho2)));
        ASSERT_TRUE(main.has_value());
        EXPECT_NEAR(*main, 1.0 / 9, 1e-10);
        auto full = detect_shrink(tomography(xqq_stages::s1t1(rho2)));
        ASSERT_TRUE(full.has_value());
        EXPECT_NEAR(*full, 4.0 / 81, 1e-10);
    }
}

TEST(Commutation, Examples) {
    EXPECT_LT(verify_commutation(Channel::unitary(gates::X()), Channel::unitary(gates::Z())), 1e-14);
    EXPECT_GT(verify_commutation(Channel::unitary(gates::H()), Channel::prepare(PureState::basis(1, 0).projector(), 2)),
              0.1);
    EXPECT_THROW(verify_commutation(Channel::identity(2), Channel::identity(4)), UsageError);
}

TEST(WorstCase, IdentityStub) {
    SinkObjective obj{tomography(Channel::identity(2)), 1, 0};
    auto r = worst_case_fidelity(obj, {8, 8});
    EXPECT_NEAR(r.min_value, 1, 1e-14);
    EXPECT_TRUE(r.converged);
}

TEST(WorstCase, FindsAnInputDependentMinimum) {
    // Amplitude damping style map: worst input is |1>.
    double g = 0.3;
    Channel damp(std::vector<Mat>{Mat{{1, 0}, {0, std::sqrt(1 - g)}}, Mat{{0, std::sqrt(g)}, {0, 0}}});
    SinkObjective obj{tomography(damp), 1, 0};
    auto r = worst_case_fidelity(obj, {9, 8});
    EXPECT_NEAR(r.min_value, 1 - g, 1e-12);
    EXPECT_NEAR(r.argmin[0].theta1, std::numbers::pi / 2, 1e-9);
    EXPECT_NEAR(r.max_value, 1, 1e-12);
}

TEST(WorstCase, RefinementOnOffGridMinimum) {
    // Dephasing about an axis that no grid point hits exactly.
    PureState axis = PureState::from_angles(0.4137, 1.2345);
    Mat p = axis.projector(), q = axis.perp().projector();
    Channel deph(std::vector<Mat>{p * std::sqrt(0.5) + q * std::sqrt(0.5), (p - q) * std::sqrt(0.5)});
    SinkObjective obj{tomography(deph), 1, 0};
    SearchOptions opt{8, 8};
    auto r = worst_case_fidelity(obj, opt);
    EXPECT_NEAR(r.min_value, 0.5, 1e-9);
    EXPECT_GE(r.depth, 2);
}

TEST(WorstCase, XqqSinks) {
    SearchOptions opt{16, 8};
    auto t1 = worst_case_fidelity(sink_objective(ProtocolId::xqq, 0), opt);
    auto t2 = worst_case_fidelity(sink_objective(ProtocolId::xqq, 1), opt);
    EXPECT_NEAR(t1.min_value, 0.5 + 2.0 / 81, 1e-10);
    EXPECT_NEAR(t2.min_value, 0.5 + 2 * kS3 / 243, 1e-10);
    EXPECT_LE(t1.max_value - t1.min_value, 1e-9);
    EXPECT_LE(t2.max_value - t2.min_value, 1e-9);
    EXPECT_EQ(t1.argmin.size(), 2u);
}

TEST(WorstCase, SerialMatchesParallel) {
    Rng rng(5, 2);
    SinkObjective obj{tomography(random_channel(rng, 2, 2)), 1, 0};
    for (int jobs : {1, 2, 3}) {
        SearchOptions opt{12, 10};
        opt.jobs = jobs;
        auto a = worst_case_fidelity(obj, opt), b = worst_case_fidelity_serial(obj, opt);
        EXPECT_EQ(a.min_value, b.min_value);
        EXPECT_EQ(a.max_value, b.max_value);
        EXPECT_EQ(a.argmin[0].theta1, b.argmin[0].theta1);
        EXPECT_EQ(a.argmin[0].theta2, b.argmin[0].theta2);
        EXPECT_EQ(a.depth, b.depth);
    }
}

TEST(WorstCase, DoublingTheGridIsStable) {
    for (size_t sink = 0; sink < 2; sink++) {
        auto obj = sink_objective(ProtocolId::xqq, sink);
        auto a = worst_case_fidelity(obj, {8, 8}), b = worst_case_fidelity(obj, {16, 16});
        EXPECT_LT(std::abs(a.min_value - b.min_value), 1e-6);
    }
}

TEST(WorstCase, XqcObjectives) {
    ProtocolInput fixed{{PureState::basis(1, 0), Bits{1, 1}}};
    auto t1 = worst_case_fidelity(sink_objective(ProtocolId::xqc, 0, fixed), {8, 8});
    auto t2 = worst_case_fidelity(sink_objective(ProtocolId::xqc, 1, fixed), {8, 8});
    EXPECT_NEAR(t1.min_value, 13.0 / 18, 1e-10);
    EXPECT_NEAR(t2.min_value, 11.0 / 18, 1e-10);
    EXPECT_THROW(sink_objective(ProtocolId::x2c2c, 0), UsageError);
    EXPECT_THROW(sink_objective(ProtocolId::xqq, 2), UsageError);
    EXPECT_THROW(worst_case_fidelity(sink_objective(ProtocolId::xqq, 0), {4, 8}), UsageError);
}

TEST(WorstCase, Xq3Sinks) {
    const double want[3] = {0.501219326322206, 0.500469318920237, 0.500469318920237};
    for (size_t sink = 0; sink < 3; sink++) {
        auto r = worst_case_fidelity(sink_objective(ProtocolId::xq3, sink), {8, 8});
        EXPECT_NEAR(r.min_value, want[sink], 1e-10);
        EXPECT_GT(r.min_value, 0.5);
    }
}

TEST(Tetra, ClosedForms) {
    EXPECT_LT(verify_tetra_closed_form(0, 0), 1e-12);
    auto p = ttr_povm().probabilities(PureState::basis(1, 0).projector());
    EXPECT_NEAR(p[0], 0.25 + kS3 / 12, 1e-12);
    EXPECT_NEAR(p[1], 0.25 + kS3 / 12, 1e-12);
    EXPECT_NEAR(p[2], 0.25 - kS3 / 12, 1e-12);
    EXPECT_NEAR(p[3], 0.25 - kS3 / 12, 1e-12);
    Rng rng(6, 2);
    for (int k = 0; k < 256; k++) {
        EXPECT_LT(verify_tetra_closed_form(std::numbers::pi * rng.uniform(), 2 * std::numbers::pi * rng.uniform()),
                  1e-12);
    }
}

TEST(BellTable, AllStates) {
    EXPECT_LT(verify_bell_table(), 1e-10);
}

TEST(Stage2, Residuals) {
    Rng rng(7, 2);
    for (int k = 0; k < 4; k++) {
        auto r = verify_xqq_stage2(DensityOp(random_pure_state(rng)));
        EXPECT_LT(r.identity_residual, 1e-10);
        EXPECT_LT(r.fidelity_error, 1e-10);
        EXPECT_LT(r.composed_error, 1e-10);
    }
}

TEST(Suites, AllPass) {
    auto checks = run_suite(Suite::all);
    EXPECT_GE(checks.size(), 20u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.pass) << c.anchor << " residual " << c.residual;
    }
    EXPECT_THROW(parse_suite("nope"), UsageError);
}

TEST(Suites, ToleranceOverrideCanFail) {
    auto checks = run_suite(Suite::tables, 1e-300);
    bool any_fail = false;
    for (const auto &c : checks) {
        any_fail |= !c.pass;
    }
    EXPECT_TRUE(any_fail);
}
