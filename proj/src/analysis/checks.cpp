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
#include <limits>
#include <numbers>

#include "qnc/analysis.hpp"
#include "qnc/random.hpp"

namespace qnc {

namespace {

using std::numbers::pi;
const double kS3 = std::sqrt(3.0);
const double kS2 = std::sqrt(2.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

// Expands a k-source joint operator into products of one-qubit matrix units.
Mat multilinear(size_t k, const Mat &m, const std::function<Mat(const std::vector<Mat> &)> &f) {
    size_t dim = size_t{1} << k;
    Mat out;
    for (size_t a = 0; a < dim; a++) {
        for (size_t b = 0; b < dim; b++) {
            if (m(a, b) == cplx(0)) {
                continue;
            }
            std::vector<Mat> units;
            for (size_t s = 0; s < k; s++) {
                size_t shift = k - 1 - s;
                units.push_back(Mat::unit(2, (a >> shift) & 1, (b >> shift) & 1));
            }
            Mat term = f(units) * m(a, b);
            if (out.empty()) {
                out = term;
            } else {
                out += term;
            }
        }
    }
    return out;
}

unsigned fixed_bit(const ProtocolInput &fixed, size_t k) {
    if (fixed.sources.size() <= k) {
        throw UsageError("sink_objective: classical source " + std::to_string(k + 1) + " is required");
    }
    const auto *b = std::get_if<Bits>(&fixed.sources[k]);
    if (!b || b->width != 1 || b->value > 1) {
        throw UsageError("sink_objective: source " + std::to_string(k + 1) + " must be one bit");
    }
    return b->value;
}

std::vector<PureState> axis_states() {
    std::vector<PureState> out;
    for (Basis b : {Basis::Z, Basis::X, Basis::Y}) {
        for (unsigned bit = 0; bit < 2; bit++) {
            out.push_back(basis_state(b, bit));
        }
    }
    return out;
}

// The six axis states followed by `random` seeded random pure states.
std::vector<PureState> probe_states(uint64_t stream, size_t random) {
    std::vector<PureState> out = axis_states();
    Rng rng(0x5eed, stream);
    for (size_t k = 0; k < random; k++) {
        out.push_back(random_pure_state(rng));
    }
    return out;
}

std::vector<PureState> grid_states(size_t n1, size_t n2) {
    std::vector<PureState> out;
    for (size_t i = 0; i < n1; i++) {
        for (size_t j = 0; j < n2; j++) {
            out.push_back(PureState::from_angles(pi * static_cast<double>(i) / static_cast<double>(n1 - 1),
                                                 2 * pi * static_cast<double>(j) / static_cast<double>(n2)));
        }
    }
    return out;
}

double shrink_error(const Channel &c, double expect) {
    auto p = detect_shrink(tomography(c));
    return p ? std::abs(*p - expect) : kInf;
}

}  // namespace

SinkObjective sink_objective(ProtocolId id, size_t sink, const ProtocolInput &fixed) {
    switch (id) {
        case ProtocolId::xqq: {
            if (sink > 1) {
                break;
            }
            auto f = sink == 0 ? linear::xqq_sink1 : linear::xqq_sink2;
            Superop s = tomography(4, 2, [&](const Mat &m) {
                return multilinear(2, m, [&](const std::vector<Mat> &u) { return f(u[0], u[1]); });
            });
            return {s, 2, sink};
        }
        case ProtocolId::xqc: {
            unsigned b = fixed_bit(fixed, 1);
            bool avg = fixed.averaged;
            if (sink == 0) {
                return {tomography(2, 2, [&](const Mat &m) { return linear::xqc_sink1(m, b, avg); }), 1, 0};
            }
            if (sink == 1) {
                return {tomography(2, 1, [&](const Mat &m) { return Mat{{linear::xqc_success(m, b, avg)}}; }), 1,
                        std::nullopt};
            }
            break;
        }
        case ProtocolId::xq3: {
            if (sink > 2) {
                break;
            }
            auto j = static_cast<unsigned>(sink);
            Superop s = tomography(8, 2, [&](const Mat &m) {
                return multilinear(3, m,
                                   [&](const std::vector<Mat> &u) { return linear::xq3_sink(j, u[0], u[1], u[2]); });
            });
            return {s, 3, sink};
        }
        default:
            throw UsageError("sink_objective: protocol " + std::string(protocol_name(id)) +
                             " has no free quantum source");
    }
    throw UsageError("sink_objective: no sink " + std::to_string(sink + 1) + " in " +
                     std::string(protocol_name(id)));
}

double verify_tetra_closed_form(double theta1, double theta2) {
    PureState psi = PureState::from_angles(theta1, theta2);
    auto p = ttr_povm().probabilities(psi.projector());
    double c = std::cos(2 * theta1), s = std::sin(2 * theta1);
    double ct = std::cos(theta2), st = std::sin(theta2);
    std::array<double, 4> closed = {0.25 + kS3 / 12 * (c + s * (ct + st)), 0.25 + kS3 / 12 * (c + s * (-ct - st)),
                                    0.25 + kS3 / 12 * (-c + s * (ct - st)), 0.25 + kS3 / 12 * (-c + s * (-ct + st))};
    double err = 0;
    for (size_t r = 0; r < 4; r++) {
        err = std::max(err, std::abs(p[r] - closed[r]));
    }
    return err;
}

double verify_bell_table(const DensityOp &rho1) {
    const Mat &r = rho1.mat();
    cplx a = r(0, 0), b = r(0, 1), c = r(1, 0), d = r(1, 1);
    auto u = [](size_t i, size_t j) { return Mat::unit(2, i, j); };
    Mat I = gates::I();
    // Rows I, Z, X, Y; columns Phi+, Phi-, Psi+, Psi-.
    const double t = 1.0 / 3;
    const double table[4][4] = {{t, t, t, 0}, {t, t, 0, t}, {t, 0, t, t}, {0, t, t, t}};
    const std::array<const Mat *, 4> ws = {&gates::I(), &gates::Z(), &gates::X(), &gates::Y()};
    Mat pair = uc_pair_state(rho1).mat();
    double err = 0;
    for (size_t w = 0; w < 4; w++) {
        const Mat &W = *ws[w];
        auto conj = [&](const Mat &m) { return W * m * W.adjoint(); };
        Mat q1q6 = kron(u(0, 0) * (2.0 * a / 3.0) + u(1, 1) * (1.0 / 6) + u(0, 1) * (b / 3.0) + u(1, 0) * (c / 3.0),
                        conj(u(0, 0))) +
                   kron(u(1, 0) * (1.0 / 6) + I * (b / 3.0), conj(u(0, 1))) +
                   kron(u(0, 1) * (1.0 / 6) + I * (c / 3.0), conj(u(1, 0))) +
                   kron(u(0, 0) * (1.0 / 6) + u(1, 1) * (2.0 * d / 3.0) + u(0, 1) * (b / 3.0) + u(1, 0) * (c / 3.0),
                        conj(u(1, 1)));
        Mat big = kron(I, W);
        err = std::max(err, max_abs_diff(q1q6, big * pair * big.adjoint()));
        for (unsigned k = 0; k < 4; k++) {
            err = std::max(err, std::abs(fidelity_pure(bell_state(k), q1q6) - table[w][k]));
        }
    }
    return err;
}

double verify_bell_table() {
    double err = 0;
    for (const auto &s : probe_states(11, 100)) {
        err = std::max(err, verify_bell_table(DensityOp(s)));
    }
    return err;
}

Stage2Residuals verify_xqq_stage2(const DensityOp &rho1) {
    Channel d = xqq_stages::d4d2(rho1.mat());
    Channel composed = compose(d, depolarize(ShrinkFactor(4.0 / 9)));
    Mat half = gates::I() * 0.5;
    Stage2Residuals r{max_abs_diff(d.apply(half), half), 0, 0};
    const double f = 0.5 + kS3 / 54, g = 0.5 + 2 * kS3 / 243;
    for (const auto &psi : grid_states(32, 16)) {
        Mat p = psi.projector();
        r.fidelity_error = std::max(r.fidelity_error, std::abs(fidelity_pure(psi, d.apply(p)) - f));
        r.composed_error = std::max(r.composed_error, std::abs(fidelity_pure(psi, composed.apply(p)) - g));
    }
    return r;
}

Suite parse_suite(std::string_view name) {
    if (name == "lemmas") {
        return Suite::lemmas;
    }
    if (name == "tables") {
        return Suite::tables;
    }
    if (name == "protocols") {
        return Suite::protocols;
    }
    if (name == "all") {
        return Suite::all;
    }
    throw UsageError("unknown suite '" + std::string(name) + "'");
}

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks &out, std::string anchor, std::string detail, double residual, double tol) {
    out.push_back({std::move(anchor), std::move(detail), residual, tol, residual <= tol});
}

void lemma_checks(Checks &out) {
    {
        double r = frobenius_distance(compose(tomography(depolarize(ShrinkFactor(2.0 / 3))),
                                              tomography(depolarize(ShrinkFactor(2.0 / 3)))),
                                      tomography(depolarize(ShrinkFactor(4.0 / 9))));
        Rng rng(0x5eed, 1);
        for (int k = 0; k < 20; k++) {
            double p = rng.uniform(), q = rng.uniform();
            Channel pq = compose(depolarize(ShrinkFactor(p)), depolarize(ShrinkFactor(q)));
            r = std::max(r, frobenius_distance(tomography(pq), tomography(depolarize(ShrinkFactor(p * q)))));
        }
        add(out, "shrink-composition", "p- then q-shrinking is pq-shrinking", r, 1e-12);
    }
    {
        double r = 0;
        Rng rng(0x5eed, 2);
        for (int k = 0; k < 20; k++) {
            double p = rng.uniform();
            Channel c = depolarize(ShrinkFactor(p));
            for (const auto &s : probe_states(2 + static_cast<uint64_t>(k), 10)) {
                r = std::max(r, 0.5 + p / 2 - fidelity_pure(s, c.apply(s.projector())));
            }
        }
        add(out, "shrink-fidelity", "fidelity of a p-shrinking map is at least 1/2 + p/2", std::max(r, 0.0), 1e-12);
    }
    {
        Channel uc = uc_clone();
        double r = std::max(shrink_error(trace_output(uc, {0}), 2.0 / 3), shrink_error(trace_output(uc, {1}), 2.0 / 3));
        add(out, "uc-marginal-shrink", "each universal-cloner marginal is 2/3-shrinking", r, 1e-10);
        double f = 0;
        Channel m = trace_output(uc, {0});
        for (const auto &s : grid_states(20, 10)) {
            f = std::max(f, std::abs(fidelity_pure(s, m.apply(s.projector())) - 5.0 / 6));
        }
        add(out, "uc-marginal-fidelity", "marginal fidelity 5/6 on 200 grid states", f, 1e-10);
    }
    {
        double rc = 0, rd = 0;
        for (const auto &s : probe_states(3, 16)) {
            rc = std::max(rc, verify_commutation(xqq_stages::c3(), xqq_stages::c2(s.projector())));
            rd = std::max(rd, verify_commutation(xqq_stages::d3(), xqq_stages::d2(s.projector())));
        }
        add(out, "c3-c2-commute", "t0 cloner commutes with the s0 map on the s1 path", rc, 1e-10);
        add(out, "d3-d2-commute", "t0 cloner commutes with the s0 map on the s2 path", rd, 1e-10);
    }
    {
        double r = 0;
        for (const auto &s : probe_states(4, 16)) {
            r = std::max(r, shrink_error(xqq_stages::c4c2(s.projector()), 1.0 / 9));
        }
        add(out, "induced-t1-shrink", "s1 path without the t0 cloner is 1/9-shrinking", r, 1e-10);
    }
    {
        Channel c = gr_ttr_channel();
        const cplx i(0, 1);
        auto v = [](VPair w, const Mat &m) { return v_twirl(w, m); };
        auto u = [](size_t a, size_t b) { return Mat::unit(2, a, b); };
        double r = 0;
        for (size_t a = 0; a < 2; a++) {
            for (size_t b = 0; b < 2; b++) {
                Mat x = u(a, b);
                Mat mixed = gates::I() * ((1 - 1 / kS3) * x.trace() / 2.0);
                Mat vpm = v(VPair::IX, x) - v(VPair::YZ, x);
                Mat vim = v(VPair::IY, x) - v(VPair::ZX, x);
                r = std::max(r, max_abs_diff(c.apply(kron(x, u(0, 0))), v(VPair::IZ, x) * (1 / kS3) + mixed));
                r = std::max(r, max_abs_diff(c.apply(kron(x, u(1, 1))), v(VPair::XY, x) * (1 / kS3) + mixed));
                r = std::max(r, max_abs_diff(c.apply(kron(x, u(0, 1))), (vpm + vim * i) * (1 / (2 * kS3))));
                r = std::max(r, max_abs_diff(c.apply(kron(x, u(1, 0))), (vpm - vim * i) * (1 / (2 * kS3))));
            }
        }
        for (VPair w : {VPair::IZ, VPair::XY, VPair::IX, VPair::YZ, VPair::IY, VPair::ZX}) {
            r = std::max(r, max_abs_diff(v(w, gates::I()), gates::I()));
        }
        add(out, "gr-ttr-action", "tetra-keyed group operation on the four matrix units", r, 1e-12);
    }
    {
        const std::array<VPair, 6> all = {VPair::IZ, VPair::XY, VPair::IX, VPair::YZ, VPair::IY, VPair::ZX};
        Mat half = gates::I() * 0.5;
        double r = 0;
        Rng rng(0x5eed, 5);
        for (int rep = 0; rep < 20; rep++) {
            Mat x = random_density(rng, 1).mat();
            cplx a = x(0, 0), b = x(0, 1), c = x(1, 0), d = x(1, 1);
            Mat ad{{a, 0}, {0, d}}, da{{d, 0}, {0, a}};
            Mat xp{{0.5, (b + c) / 2.0}, {(b + c) / 2.0, 0.5}}, xm{{0.5, -(b + c) / 2.0}, {-(b + c) / 2.0, 0.5}};
            Mat yp{{0.5, (b - c) / 2.0}, {(c - b) / 2.0, 0.5}}, ym{{0.5, (c - b) / 2.0}, {(b - c) / 2.0, 0.5}};
            auto vv = [&](VPair p, VPair q) { return v_twirl(p, v_twirl(q, x)); };
            const std::array<std::array<const Mat *, 4>, 3> same = {
                {{&ad, &ad, &da, &da}, {&xp, &xp, &xm, &xm}, {&yp, &yp, &ym, &ym}}};
            for (size_t set = 0; set < 3; set++) {
                VPair p = all[2 * set], q = all[2 * set + 1];
                r = std::max(r, max_abs_diff(vv(p, p), *same[set][0]));
                r = std::max(r, max_abs_diff(vv(q, q), *same[set][1]));
                r = std::max(r, max_abs_diff(vv(p, q), *same[set][2]));
                r = std::max(r, max_abs_diff(vv(q, p), *same[set][3]));
            }
            for (size_t p = 0; p < 6; p++) {
                for (size_t q = 0; q < 6; q++) {
                    if (p / 2 != q / 2) {
                        r = std::max(r, max_abs_diff(vv(all[p], all[q]), half));
                    }
                }
            }
        }
        add(out, "twirl-compositions", "all pairwise compositions of the six twirls", r, 1e-12);
    }
    {
        double r = 0;
        Rng rng(0x5eed, 6);
        for (int k = 0; k < 100; k++) {
            DensityOp pair = random_density(rng, 2);
            Mat marg = partial_trace(pair, {0}).mat();
            for (double p : {0.0, 1.0 / 3, 2.0 / 3, 1.0}) {
                Mat expect = pair.mat() * p + kron(marg, gates::I() * 0.5) * (1 - p);
                r = std::max(r, max_abs_diff(shrink_on_second(ShrinkFactor(p), pair).mat(), expect));
            }
        }
        add(out, "shrink-second-qubit", "shrinking the second qubit mixes in Tr2(rho) (x) I/2", r, 1e-12);
    }
    {
        double r = 0;
        for (const auto &s : probe_states(7, 16)) {
            auto res = verify_xqq_stage2(DensityOp(s));
            r = std::max({r, res.identity_residual, res.fidelity_error, res.composed_error});
        }
        add(out, "induced-t2-fidelity", "s2 path without the t0 cloner keeps I/2 and has fidelity 1/2 + sqrt3/54",
            r, 1e-10);
    }
}

void table_checks(Checks &out) {
    add(out, "bell-table", "Bell outcome probabilities per group element are 1/3 or 0", verify_bell_table(), 1e-10);
    double r = verify_tetra_closed_form(0, 0);
    Rng rng(0x5eed, 8);
    for (int k = 0; k < 256; k++) {
        r = std::max(r, verify_tetra_closed_form(pi * rng.uniform(), 2 * pi * rng.uniform()));
    }
    add(out, "tetra-probabilities", "tetra POVM against the closed forms on 256 angles", r, 1e-12);
}

void protocol_checks(Checks &out, int jobs) {
    SearchOptions opt;
    opt.n1 = 16;
    opt.n2 = 8;
    opt.jobs = jobs;
    const std::array<double, 2> xqq = {0.5 + 2.0 / 81, 0.5 + 2 * kS3 / 243};
    for (size_t sink = 0; sink < 2; sink++) {
        auto res = worst_case_fidelity(sink_objective(ProtocolId::xqq, sink), opt);
        double r = std::max(std::abs(res.min_value - xqq[sink]), std::abs(res.max_value - xqq[sink]));
        add(out, sink == 0 ? "xqq-t1-worst-case" : "xqq-t2-worst-case",
            sink == 0 ? "constant fidelity 1/2 + 2/81" : "constant fidelity 1/2 + 2 sqrt3/243", r, 1e-8);
    }
    {
        double r = 0;
        for (const auto &s : probe_states(9, 4)) {
            r = std::max(r, shrink_error(xqq_stages::s1t1(s.projector()), 4.0 / 81));
        }
        add(out, "xqq-s1t1-shrink", "full s1 to t1 map is 4/81-shrinking", r, 1e-10);
    }
    {
        double r = 0, ra = 0;
        for (const auto &s : grid_states(8, 8)) {
            for (unsigned b = 0; b < 2; b++) {
                ProtocolInput in{{s, Bits{b, 1}}};
                auto v = exact_values(ProtocolId::xqc, in);
                r = std::max({r, std::abs(v[0].value - 13.0 / 18), std::abs(v[1].value - 11.0 / 18)});
                in.averaged = true;
                v = exact_values(ProtocolId::xqc, in);
                ra = std::max({ra, std::abs(v[0].value - 2.0 / 3), std::abs(v[1].value - 17.0 / 24)});
            }
        }
        add(out, "xqc-values", "t1 fidelity 13/18 and t2 success 11/18", r, 1e-10);
        add(out, "xqc-averaged", "random-bit mixture gives 2/3 at t1 and 17/24 at t2", ra, 1e-10);
    }
    for (unsigned w : {2u, 3u}) {
        double target = w == 2 ? 0.5 + kS2 / 16 : 0.5 + 2.0 / 81;
        double q6 = w == 2 ? 5.0 / 8 : 0.5 + 2 * kS3 / 81;
        auto run = w == 2 ? run_x2c2c : run_x3c3c;
        auto decode = w == 2 ? x2c2c_q6_decode : x3c3c_q6_decode;
        double r = 0, rq = 0;
        for (unsigned x = 0; x < (1u << w); x++) {
            for (unsigned y = 0; y < (1u << w); y++) {
                for (unsigned i1 = 1; i1 <= w; i1++) {
                    rq = std::max(rq, std::abs(decode(x, y, i1) - q6));
                    for (unsigned i2 = 1; i2 <= w; i2++) {
                        auto [p1, p2] = run(x, y, i1, i2);
                        r = std::max({r, std::abs(p1 - target), std::abs(p2 - target)});
                    }
                }
            }
        }
        std::string name = w == 2 ? "x2c2c" : "x3c3c";
        add(out, name + "-success", "every input pair and index pair", r, 1e-10);
        add(out, name + "-q6-decode", "bottleneck copy decodes the xor", rq, 1e-10);
    }
    {
        double r = 0;
        for (unsigned x = 0; x < 2; x++) {
            for (unsigned y = 0; y < 2; y++) {
                auto [o1, o2] = run_classical_butterfly(x, y);
                r += (o1 != x) + (o2 != y);
            }
        }
        add(out, "classical-butterfly", "xor relay delivers both bits", r, 0);
    }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite s, double tol, int jobs) {
    Checks out;
    if (s == Suite::lemmas || s == Suite::all) {
        lemma_checks(out);
    }
    if (s == Suite::tables || s == Suite::all) {
        table_checks(out);
    }
    if (s == Suite::protocols || s == Suite::all) {
        protocol_checks(out, jobs);
    }
    if (tol > 0) {
        for (auto &c : out) {
            c.tol = tol;
            c.pass = c.residual <= tol;
        }
    }
    return out;
}

}  // namespace qnc
