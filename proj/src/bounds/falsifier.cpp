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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnc/bounds.hpp"
#include "qnc/random.hpp"

namespace qnc {

namespace {

Channel blend(double w, const Channel &a, const Channel &b) {
    return mixture({{w, a}, {1 - w, b}});
}

// rho -> rho (x) I/2 or I/2 (x) rho.
Channel route(size_t side) {
    return Channel::from_action(2, 4, [side](const Mat &m) {
        Mat half = gates::I() * 0.5;
        return side == 0 ? kron(m, half) : kron(half, m);
    });
}

// Measure in `measure`, prepare the outcome in Z.
Channel measure_prepare(Basis measure) {
    Povm p = basis_povm(measure);
    return Channel::from_action(2, 2, [p](const Mat &m) {
        Mat out(2, 2);
        for (size_t k = 0; k < 2; k++) {
            out(k, k) = (p.elements()[k].effect * m).trace();
        }
        return out;
    });
}

struct TrialOutcome {
    double min_fidelity;
    double epsilon;
    double distance;
};

const SearchOptions kTrialGrid{17, 16};

TrialOutcome run_trial(uint64_t seed, uint64_t trial) {
    Rng rng(seed, trial + 1);
    NoSideLinkProtocol p = random_no_side_link(rng);
    if (trial % 2 == 1) {
        // Forwarding mixture: one source leans towards its own sink.
        size_t k = rng.uniform() < 0.5 ? 0 : 1;
        double w1 = rng.uniform(), w2 = rng.uniform(), w3 = rng.uniform();
        Channel keep = trace_output(Channel::identity(4), {k});
        p.encoder = blend(w1, keep, p.encoder);
        p.splitter = blend(w2, route(k), p.splitter);
        Channel &dec = k == 0 ? p.decoder1 : p.decoder2;
        dec = blend(w3, Channel::identity(2), dec);
    }
    NoSideLinkScore s = score_protocol(p, kTrialGrid);
    return {std::min(s.t1.min_value, s.t2.min_value), s.epsilon_t2, s.image_distance};
}

FalsifierResult reduce(const std::vector<TrialOutcome> &out, uint64_t seed) {
    FalsifierResult r{out.size(), seed, -std::numeric_limits<double>::infinity(), 0, 0,
                      std::numeric_limits<double>::infinity(), 0};
    for (uint64_t t = 0; t < out.size(); t++) {
        if (out[t].min_fidelity > r.max_min_fidelity) {
            r.max_min_fidelity = out[t].min_fidelity;
            r.worst_trial = t;
        }
        if (out[t].epsilon > 0) {
            r.distance_checks++;
            double margin = out[t].distance - 4 * out[t].epsilon;
            r.min_distance_margin = std::min(r.min_distance_margin, margin);
            r.distance_violations += margin < -1e-6;
        }
    }
    return r;
}

}  // namespace

NoSideLinkProtocol random_no_side_link(Rng &rng) {
    Channel enc = random_channel(rng, 4, 2);
    Channel split = random_channel(rng, 2, 4);
    Channel d1 = random_channel(rng, 2, 2);
    Channel d2 = random_channel(rng, 2, 2);
    return {enc, split, d1, d2};
}

NoSideLinkProtocol forward_first_protocol() {
    return {trace_output(Channel::identity(4), {0}), route(0), Channel::identity(2), Channel::identity(2)};
}

NoSideLinkProtocol qra_pc_protocol() {
    Channel enc = Channel::from_action(4, 2, [](const Mat &m) {
        Mat out(2, 2);
        for (unsigned x1 = 0; x1 < 2; x1++) {
            for (unsigned x2 = 0; x2 < 2; x2++) {
                size_t idx = 2 * x1 + x2;
                cplx w = m(idx, idx);
                out += qra2_state(static_cast<unsigned>(idx)).projector() * w;
            }
        }
        return out;
    });
    return {enc, pc_clone(), measure_prepare(Basis::Z), measure_prepare(Basis::X)};
}

NoSideLinkScore score_protocol(const NoSideLinkProtocol &p, const SearchOptions &opt) {
    if (p.encoder.dim_in() != 4 || p.encoder.dim_out() != 2 || p.splitter.dim_in() != 2 ||
        p.splitter.dim_out() != 4) {
        throw UsageError("score_protocol: encoder must be 2 -> 1 qubits and splitter 1 -> 2");
    }
    Channel to1 = compose(p.decoder1, trace_output(p.splitter, {0}));
    Channel to2 = compose(p.decoder2, trace_output(p.splitter, {1}));
    NoSideLinkScore s{};
    s.t1 = worst_case_fidelity_serial({tomography(compose(to1, p.encoder)), 2, 0}, opt);
    s.t2 = worst_case_fidelity_serial({tomography(compose(to2, p.encoder)), 2, 1}, opt);
    std::array<Channel, 2> cb = {bind_last(p.encoder, PureState::basis(1, 0).projector()),
                                 bind_last(p.encoder, PureState::basis(1, 1).projector())};
    double worst = std::numeric_limits<double>::infinity();
    for (size_t b = 0; b < 2; b++) {
        Channel path = compose(to2, cb[b]);
        Superop success = tomography(2, 1, [&](const Mat &m) { return Mat{{path.apply(m)(b, b)}}; });
        worst = std::min(worst, worst_case_fidelity_serial({success, 1, std::nullopt}, opt).min_value);
    }
    s.epsilon_t2 = worst - 0.5;
    s.image_distance = image_distance(cb[0], cb[1]);
    return s;
}

FalsifierResult theorem1_falsifier_serial(uint64_t trials, uint64_t seed) {
    if (trials < 1) {
        throw UsageError("theorem1_falsifier: trials must be at least 1");
    }
    std::vector<TrialOutcome> out(trials);
    for (uint64_t t = 0; t < trials; t++) {
        out[t] = run_trial(seed, t);
    }
    return reduce(out, seed);
}

FalsifierResult theorem1_falsifier(uint64_t trials, uint64_t seed, int jobs) {
    if (trials < 1) {
        throw UsageError("theorem1_falsifier: trials must be at least 1");
    }
    std::vector<TrialOutcome> out(trials);
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (uint64_t t = 0; t < trials; t++) {
        out[t] = run_trial(seed, t);
    }
    return reduce(out, seed);
}

}  // namespace qnc
