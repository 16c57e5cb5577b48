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
#include <stdexcept>

#include "gtest/gtest.h"
#include "qnc/bounds.hpp"
#include "qnc/random.hpp"

using namespace qnc;

TEST(FEps, Values) {
    EXPECT_NEAR(f_eps(0, BoundVariant::thm4), 0, 1e-15);
    // Frozen by direct evaluation.
    EXPECT_NEAR(f_eps(1.0 / 12, BoundVariant::thm4), 0.226764950325024, 1e-12);
    EXPECT_NEAR(f_eps(1.0 / 12, BoundVariant::thm3), 0.113382475162512, 1e-12);
    Rng rng(1, 3);
    for (int k = 0; k < 100; k++) {
        double e = 0.5 * rng.uniform();
        EXPECT_NEAR(f_eps(e, BoundVariant::thm3), f_eps(e, BoundVariant::thm4) / 2, 1e-15);
    }
    EXPECT_THROW(f_eps(-0.1, BoundVariant::thm4), std::domain_error);
    EXPECT_THROW(f_eps(0.6, BoundVariant::thm3), std::domain_error);
}

TEST(FEps, MonotoneOnLowRange) {
    for (auto v : {BoundVariant::thm4, BoundVariant::thm3}) {
        for (double e = 0; e + 1e-4 <= 1.0 / 12; e += 1e-4) {
            EXPECT_LT(f_eps(e, v), f_eps(e + 1e-4, v));
        }
    }
}

TEST(Thm4, Solution) {
    EXPECT_FALSE(thm4_satisfiable(0.05));
    EXPECT_TRUE(thm4_satisfiable(0.20));
    auto s = solve_thm4();
    EXPECT_GT(s.epsilon_star, 1.0 / 12);
    EXPECT_LT(s.epsilon_star, 1.0 / 12 + 0.02);
    EXPECT_LT(s.fidelity_bound, 11.0 / 12);
    EXPECT_DOUBLE_EQ(s.fidelity_bound, 1 - s.epsilon_star);
    EXPECT_NEAR(s.epsilon_star, 0.0839611011168640, 2e-6);
    auto fine = solve_thm4(1e-7, 5e-5);
    EXPECT_NEAR(fine.epsilon_star, s.epsilon_star, 1e-5);
}

TEST(Thm3, Solution) {
    EXPECT_NEAR(thm3_lhs(0), 1, 1e-15);
    EXPECT_NEAR(thm3_rhs(0), 0, 1e-15);
    auto s = solve_thm3();
    EXPECT_GT(s.epsilon_star, 0.017);
    EXPECT_LT(s.epsilon_star, 0.022);
    EXPECT_LT(s.fidelity_bound, 0.983);
    EXPECT_NEAR(s.epsilon_star, 0.0171903966580067, 2e-6);
    EXPECT_NEAR(solve_thm3(1e-8).epsilon_star, s.epsilon_star, 1e-5);
}

TEST(Ellipsoid, Examples) {
    auto id = ellipsoid_of(Channel::identity(2));
    for (double a : id.semiaxes) {
        EXPECT_NEAR(a, 1, 1e-12);
    }
    auto dep = ellipsoid_of(depolarize(ShrinkFactor(2.0 / 3)));
    for (double a : dep.semiaxes) {
        EXPECT_NEAR(a, 2.0 / 3, 1e-12);
    }
    EXPECT_NEAR(dep.center.z, 0, 1e-12);
    auto prep = ellipsoid_of(Channel::prepare(PureState::basis(1, 0).projector(), 2));
    for (double a : prep.semiaxes) {
        EXPECT_NEAR(a, 0, 1e-7);
    }
    EXPECT_NEAR(prep.center.z, 1, 1e-12);
}

TEST(Ellipsoid, RandomImagesInsideBall) {
    Rng rng(2, 3);
    for (int k = 0; k < 1000; k++) {
        Channel c = random_channel(rng, 2, 2);
        auto e = ellipsoid_of(c);
        EXPECT_GE(e.semiaxes[0], e.semiaxes[1]);
        EXPECT_GE(e.semiaxes[1], e.semiaxes[2]);
        EXPECT_LE(e.semiaxes[0], 1 + 1e-9);
        // The image point along the longest axis stays in the ball.
        AffineMap m = affine_of(c);
        for (int s = 0; s < 4; s++) {
            BlochVec r = bloch_from_density(DensityOp(random_pure_state(rng)));
            double v[3] = {m.d[0], m.d[1], m.d[2]};
            double in[3] = {r.x, r.y, r.z};
            for (int i = 0; i < 3; i++) {
                for (int j = 0; j < 3; j++) {
                    v[i] += m.t[i][j] * in[j];
                }
            }
            EXPECT_LE(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]), 1 + 1e-9);
        }
    }
}

TEST(NiuGriffiths, Cloners) {
    auto uc = check_niu_griffiths(uc_clone());
    EXPECT_NEAR(uc.l1, 2.0 / 3, 1e-10);
    EXPECT_NEAR(uc.l2, 2.0 / 3, 1e-10);
    EXPECT_TRUE(uc.holds);
    EXPECT_TRUE(check_niu_griffiths(pc_clone()).holds);
    Channel copy_first =
        Channel::from_action(2, 4, [](const Mat &m) { return kron(m, gates::I() * 0.5); });
    auto cf = check_niu_griffiths(copy_first);
    EXPECT_NEAR(cf.l1, 1, 1e-10);
    EXPECT_NEAR(cf.l2, 0, 1e-7);
    EXPECT_TRUE(cf.holds);
    Rng rng(3, 3);
    for (int k = 0; k < 100; k++) {
        EXPECT_TRUE(check_niu_griffiths(random_channel(rng, 2, 4)).holds);
    }
}

TEST(ImageDistance, Examples) {
    Channel p0 = Channel::prepare(PureState::basis(1, 0).projector(), 2);
    Channel p1 = Channel::prepare(PureState::basis(1, 1).projector(), 2);
    EXPECT_NEAR(image_distance(p0, p1), 2, 1e-12);
    Rng rng(4, 3);
    Channel c = random_channel(rng, 2, 2);
    EXPECT_NEAR(image_distance(c, c), 0, 1e-6);
    for (int k = 0; k < 20; k++) {
        Channel a = random_channel(rng, 2, 2), b = random_channel(rng, 2, 2);
        EXPECT_LE(image_distance(a, b), image_distance_grid(a, b) + 1e-9);
    }
    // Two shrunk balls centred on opposite poles.
    Channel s0 = compose(Channel::prepare(PureState::basis(1, 0).projector(), 2), Channel::identity(2));
    Channel ball0 = mixture({{0.5, Channel::identity(2)}, {0.5, s0}});
    Channel ball1 = mixture({{0.5, Channel::identity(2)}, {0.5, p1}});
    EXPECT_NEAR(image_distance(ball0, ball1), 0, 1e-6);
    Channel small0 = mixture({{0.25, Channel::identity(2)}, {0.75, p0}});
    Channel small1 = mixture({{0.25, Channel::identity(2)}, {0.75, p1}});
    EXPECT_NEAR(image_distance(small0, small1), 1.0, 1e-9);
}

TEST(SchmidtGap, Examples) {
    PureState z0 = PureState::basis(1, 0);
    auto g0 = schmidt_gap(make_schmidt_pair(1, 0, z0, z0));
    EXPECT_NEAR(g0.lhs, 0, 1e-15);
    EXPECT_NEAR(g0.rhs, 0, 1e-15);
    double h = 1 / std::sqrt(2.0);
    auto gh = schmidt_gap(make_schmidt_pair(h, h, z0, z0));
    EXPECT_LE(gh.lhs, 2 * h * std::sqrt(0.75) + 1e-12);
    EXPECT_TRUE(gh.holds);
    Rng rng(5, 3);
    for (int k = 0; k < 1000; k++) {
        double beta = h * rng.uniform();
        auto g = schmidt_gap(make_schmidt_pair(std::sqrt(1 - beta * beta), beta, random_pure_state(rng),
                                               random_pure_state(rng)));
        EXPECT_TRUE(g.holds) << g.lhs << " " << g.rhs;
    }
    EXPECT_THROW(make_schmidt_pair(0.5, 0.5, z0, z0), UsageError);
    EXPECT_THROW(make_schmidt_pair(h * 0.5, std::sqrt(1 - 0.125), z0, z0), UsageError);
}

TEST(NoSideLink, HandBuilt) {
    SearchOptions opt{17, 16};
    auto f = score_protocol(forward_first_protocol(), opt);
    EXPECT_NEAR(f.t1.min_value, 1, 1e-12);
    EXPECT_NEAR(f.t2.min_value, 0.5, 1e-12);
    auto q = score_protocol(qra_pc_protocol(), opt);
    EXPECT_LE(std::min(q.t1.min_value, q.t2.min_value), 0.5 + 1e-9);
    // Classical 0/1 sources: 3/4 at each sink.
    NoSideLinkProtocol p = qra_pc_protocol();
    Channel to1 = compose(p.decoder1, compose(trace_output(p.splitter, {0}), p.encoder));
    Channel to2 = compose(p.decoder2, compose(trace_output(p.splitter, {1}), p.encoder));
    for (size_t x1 = 0; x1 < 2; x1++) {
        for (size_t x2 = 0; x2 < 2; x2++) {
            Mat in = PureState::basis(2, 2 * x1 + x2).projector();
            EXPECT_NEAR(to1.apply(in)(x1, x1).real(), 0.75, 1e-12);
            EXPECT_NEAR(to2.apply(in)(x2, x2).real(), 0.75, 1e-12);
        }
    }
}

TEST(NoSideLink, Campaign) {
    auto r = theorem1_falsifier(12, 2026);
    EXPECT_LE(r.max_min_fidelity, 0.5 + 1e-6);
    EXPECT_GT(r.distance_checks, 0u);
    EXPECT_EQ(r.distance_violations, 0u);
    auto s = theorem1_falsifier_serial(12, 2026);
    EXPECT_EQ(r.max_min_fidelity, s.max_min_fidelity);
    EXPECT_EQ(r.min_distance_margin, s.min_distance_margin);
    EXPECT_THROW(theorem1_falsifier(0, 1), UsageError);
}
