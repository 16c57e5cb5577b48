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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "qnc/analysis.hpp"

namespace qnc {

namespace {

using std::numbers::pi;
using Amp = std::array<cplx, 2>;

Amp amplitudes(SourceAngles a) {
    return {std::cos(a.theta1), std::polar(std::sin(a.theta1), a.theta2)};
}

// Works on precomputed amplitudes so the grid loop does no allocation.
class Evaluator {
   public:
    explicit Evaluator(const SinkObjective &obj) : obj_(obj), k_(obj.nsources), dim_(size_t{1} << k_) {
        if (k_ < 1 || k_ > 3) {
            throw UsageError("worst-case search: one to three free sources");
        }
        if (obj.map.dim_in() != dim_) {
            throw UsageError("worst-case search: map input does not match the source count");
        }
        if (obj.target ? (*obj.target >= k_ || obj.map.dim_out() != 2) : obj.map.dim_out() != 1) {
            throw UsageError("worst-case search: map output does not match the target");
        }
    }

    double operator()(const Amp *const *amps) const {
        std::array<cplx, 8> joint{};
        for (size_t a = 0; a < dim_; a++) {
            cplx v = 1;
            for (size_t s = 0; s < k_; s++) {
                v *= (*amps[s])[(a >> (k_ - 1 - s)) & 1];
            }
            joint[a] = v;
        }
        const Mat &m = obj_.map.mat();
        size_t rows = m.rows();
        std::array<cplx, 4> out{};
        for (size_t a = 0; a < dim_; a++) {
            for (size_t b = 0; b < dim_; b++) {
                cplx w = joint[a] * std::conj(joint[b]);
                size_t col = a * dim_ + b;
                for (size_t r = 0; r < rows; r++) {
                    out[r] += m(r, col) * w;
                }
            }
        }
        if (!obj_.target) {
            return out[0].real();
        }
        const Amp &t = *amps[*obj_.target];
        cplx f = 0;
        for (size_t c = 0; c < 2; c++) {
            for (size_t d = 0; d < 2; d++) {
                f += std::conj(t[c]) * out[c * 2 + d] * t[d];
            }
        }
        return f.real();
    }

    double at(const std::vector<SourceAngles> &angles) const {
        std::array<Amp, 3> a{};
        std::array<const Amp *, 3> p{};
        for (size_t s = 0; s < k_; s++) {
            a[s] = amplitudes(angles[s]);
            p[s] = &a[s];
        }
        return (*this)(p.data());
    }

    size_t k() const { return k_; }

   private:
    const SinkObjective &obj_;
    size_t k_;
    size_t dim_;
};

struct Best {
    double value = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    uint64_t index = std::numeric_limits<uint64_t>::max();

    void offer(double v, uint64_t idx) {
        if (v < value || (v == value && idx < index)) {
            value = v;
            index = idx;
        }
        max = std::max(max, v);
    }
    void merge(const Best &o) {
        if (o.index != std::numeric_limits<uint64_t>::max()) {
            offer(o.value, o.index);
        }
        max = std::max(max, o.max);
    }
};

struct Grid {
    size_t n1, n2, k;
    uint64_t points_per_source;
    uint64_t total;
    std::vector<Amp> amps;

    SourceAngles angles(uint64_t local) const {
        size_t i = local / n2, j = local % n2;
        return {pi * static_cast<double>(i) / static_cast<double>(n1 - 1),
                2 * pi * static_cast<double>(j) / static_cast<double>(n2)};
    }
};

Grid make_grid(const SearchOptions &opt, size_t k) {
    if (opt.n1 < 8 || opt.n2 < 8) {
        throw UsageError("worst-case search: grid must be at least 8x8");
    }
    Grid g{opt.n1, opt.n2, k, static_cast<uint64_t>(opt.n1) * opt.n2, 1, {}};
    for (size_t s = 0; s < k; s++) {
        g.total *= g.points_per_source;
        if (g.total > (uint64_t{1} << 32)) {
            throw UsageError("worst-case search: joint grid too large, use a coarser grid");
        }
    }
    for (uint64_t p = 0; p < g.points_per_source; p++) {
        g.amps.push_back(amplitudes(g.angles(p)));
    }
    return g;
}

// Scans flat indices [lo, hi); index digits are sources, most significant first.
Best scan(const Evaluator &ev, const Grid &g, uint64_t lo, uint64_t hi) {
    Best best;
    std::array<const Amp *, 3> p{};
    for (uint64_t idx = lo; idx < hi; idx++) {
        uint64_t rest = idx;
        for (size_t s = g.k; s-- > 0;) {
            p[s] = &g.amps[rest % g.points_per_source];
            rest /= g.points_per_source;
        }
        best.offer(ev(p.data()), idx);
    }
    return best;
}

FidelitySearchResult refine(const Evaluator &ev, const Grid &g, const Best &coarse, const SearchOptions &opt) {
    std::vector<SourceAngles> cur(g.k);
    uint64_t rest = coarse.index;
    for (size_t s = g.k; s-- > 0;) {
        cur[s] = g.angles(rest % g.points_per_source);
        rest /= g.points_per_source;
    }
    double h1 = pi / static_cast<double>(g.n1 - 1), h2 = 2 * pi / static_cast<double>(g.n2);
    double value = coarse.value;
    int depth = 0;
    bool converged = false;
    size_t combos = 1;
    for (size_t s = 0; s < g.k; s++) {
        combos *= 9;
    }
    std::vector<SourceAngles> trial(g.k);
    while (depth < opt.max_depth) {
        depth++;
        double best = value, worst = value;
        std::vector<SourceAngles> best_at = cur;
        // Offsets in {-h, 0, +h} per angle; the center is combo (all ones).
        for (size_t c = 0; c < combos; c++) {
            size_t r = c;
            for (size_t s = 0; s < g.k; s++) {
                int o1 = static_cast<int>(r % 3) - 1;
                r /= 3;
                int o2 = static_cast<int>(r % 3) - 1;
                r /= 3;
                trial[s].theta1 = std::clamp(cur[s].theta1 + o1 * h1, 0.0, pi);
                trial[s].theta2 = std::fmod(cur[s].theta2 + o2 * h2 + 2 * pi, 2 * pi);
            }
            double v = ev.at(trial);
            worst = std::max(worst, v);
            if (v < best) {
                best = v;
                best_at = trial;
            }
        }
        value = best;
        cur = best_at;
        h1 /= 4;
        h2 /= 4;
        // Flat stencil: no finer level can gain more than its spread.
        if (worst - best < opt.refine_tol) {
            converged = true;
            break;
        }
    }
    return {value, coarse.max, cur, g.n1, g.n2, depth, converged};
}

}  // namespace

double evaluate(const SinkObjective &obj, const std::vector<SourceAngles> &angles) {
    Evaluator ev(obj);
    if (angles.size() != ev.k()) {
        throw UsageError("evaluate: one angle pair per free source");
    }
    return ev.at(angles);
}

FidelitySearchResult worst_case_fidelity_serial(const SinkObjective &obj, const SearchOptions &opt) {
    Evaluator ev(obj);
    Grid g = make_grid(opt, ev.k());
    return refine(ev, g, scan(ev, g, 0, g.total), opt);
}

FidelitySearchResult worst_case_fidelity(const SinkObjective &obj, const SearchOptions &opt) {
    Evaluator ev(obj);
    Grid g = make_grid(opt, ev.k());
    int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
    auto chunks = static_cast<uint64_t>(threads) * 8;
    std::vector<Best> partial(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (uint64_t c = 0; c < chunks; c++) {
        uint64_t lo = g.total * c / chunks, hi = g.total * (c + 1) / chunks;
        partial[c] = scan(ev, g, lo, hi);
    }
    Best best;
    for (const auto &b : partial) {
        best.merge(b);
    }
    return refine(ev, g, best, opt);
}

}  // namespace qnc
