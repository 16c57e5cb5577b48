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
#include <cmath>
#include <limits>
#include <numbers>

#include "qnc/bounds.hpp"

namespace qnc {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to_vec(const BlochVec &b) {
    return {b.x, b.y, b.z};
}

void require_qubit_channel(const Channel &c, const char *who) {
    if (c.dim_in() != 2 || c.dim_out() != 2) {
        throw UsageError(std::string(who) + ": one-qubit channels only");
    }
}

Vec3 affine_apply(const AffineMap &m, const Vec3 &r) {
    Vec3 out = m.d;
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            out[i] += m.t[i][j] * r[j];
        }
    }
    return out;
}

double norm(const Vec3 &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

void project_to_ball(Vec3 &v) {
    double n = norm(v);
    if (n > 1) {
        for (auto &x : v) {
            x /= n;
        }
    }
}

}  // namespace

AffineMap affine_of(const Channel &c) {
    require_qubit_channel(c, "affine_of");
    AffineMap m{};
    m.d = to_vec(bloch_of(c.apply(gates::I() * 0.5)));
    const Mat *paulis[3] = {&gates::X(), &gates::Ypauli(), &gates::Z()};
    for (size_t j = 0; j < 3; j++) {
        Vec3 col = to_vec(bloch_of(c.apply(*paulis[j])));
        for (size_t i = 0; i < 3; i++) {
            m.t[i][j] = col[i] / 2;
        }
    }
    return m;
}

EllipsoidSummary ellipsoid_of(const Channel &c) {
    AffineMap m = affine_of(c);
    Mat tt(3, 3);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            double s = 0;
            for (size_t k = 0; k < 3; k++) {
                s += m.t[k][i] * m.t[k][j];
            }
            tt(i, j) = s;
        }
    }
    auto eig = herm_eig(tt);
    EllipsoidSummary out{};
    for (size_t k = 0; k < 3; k++) {
        out.semiaxes[k] = std::sqrt(std::max(0.0, eig.values[k]));
    }
    out.center = {m.d[0], m.d[1], m.d[2]};
    return out;
}

NiuGriffiths check_niu_griffiths(const Channel &broadcast, double tol) {
    if (broadcast.dim_in() != 2 || broadcast.dim_out() != 4) {
        throw UsageError("check_niu_griffiths: needs a one-to-two qubit channel");
    }
    double l1 = ellipsoid_of(trace_output(broadcast, {0})).semiaxes[2];
    double l2 = ellipsoid_of(trace_output(broadcast, {1})).semiaxes[0];
    return {l1, l2, l1 <= std::sqrt(std::max(0.0, 1 - l2 * l2)) + tol};
}

double image_distance(const Channel &c0, const Channel &c1) {
    require_qubit_channel(c0, "image_distance");
    require_qubit_channel(c1, "image_distance");
    AffineMap a = affine_of(c0), b = affine_of(c1);
    // g(r, s) = |A r - B s + (d0 - d1)|^2; step 1/L with L = 2 ||[A, -B]||^2.
    Mat ab(3, 6);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            ab(i, j) = a.t[i][j];
            ab(i, j + 3) = -b.t[i][j];
        }
    }
    double lip = 2 * herm_eig(ab * ab.adjoint()).values[0];
    Vec3 r{}, s{};
    auto residual = [&](const Vec3 &x, const Vec3 &y) {
        Vec3 ax = affine_apply(a, x), by = affine_apply(b, y);
        return Vec3{ax[0] - by[0], ax[1] - by[1], ax[2] - by[2]};
    };
    if (lip < 1e-15) {
        return norm(residual(r, s));
    }
    Vec3 yr = r, ys = s;
    double t = 1;
    for (int it = 0; it < 20000; it++) {
        Vec3 e = residual(yr, ys);
        Vec3 nr = yr, ns = ys;
        for (size_t j = 0; j < 3; j++) {
            double gr = 0, gs = 0;
            for (size_t i = 0; i < 3; i++) {
                gr += 2 * a.t[i][j] * e[i];
                gs -= 2 * b.t[i][j] * e[i];
            }
            nr[j] -= gr / lip;
            ns[j] -= gs / lip;
        }
        project_to_ball(nr);
        project_to_ball(ns);
        double tn = 0.5 * (1 + std::sqrt(1 + 4 * t * t));
        double step = 0;
        for (size_t j = 0; j < 3; j++) {
            step = std::max({step, std::abs(nr[j] - r[j]), std::abs(ns[j] - s[j])});
            yr[j] = nr[j] + (t - 1) / tn * (nr[j] - r[j]);
            ys[j] = ns[j] + (t - 1) / tn * (ns[j] - s[j]);
        }
        r = nr;
        s = ns;
        t = tn;
        if (step < 1e-14) {
            break;
        }
    }
    return norm(residual(r, s));
}

double image_distance_grid(const Channel &c0, const Channel &c1, size_t n) {
    require_qubit_channel(c0, "image_distance_grid");
    require_qubit_channel(c1, "image_distance_grid");
    using std::numbers::pi;
    std::vector<BlochVec> p0, p1;
    for (size_t i = 0; i <= n; i++) {
        for (size_t j = 0; j < n; j++) {
            Mat proj = PureState::from_angles(pi * static_cast<double>(i) / static_cast<double>(n),
                                              2 * pi * static_cast<double>(j) / static_cast<double>(n))
                           .projector();
            p0.push_back(bloch_of(c0.apply(proj)));
            p1.push_back(bloch_of(c1.apply(proj)));
        }
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto &x : p0) {
        for (const auto &y : p1) {
            best = std::min(best, distance(x, y));
        }
    }
    return best;
}

SchmidtPair make_schmidt_pair(double alpha, double beta, const PureState &psi2, const PureState &psi1) {
    if (std::abs(alpha * alpha + beta * beta - 1) > 1e-12 || beta < 0 || beta > alpha) {
        throw UsageError("make_schmidt_pair: need alpha^2 + beta^2 = 1 and 0 <= beta <= alpha");
    }
    if (psi1.nqubits() != 1 || psi2.nqubits() != 1) {
        throw UsageError("make_schmidt_pair: one-qubit components only");
    }
    return {alpha, beta, psi2, psi2.perp(), psi1, psi1.perp()};
}

SchmidtGap schmidt_gap(const SchmidtPair &p) {
    std::vector<cplx> chi = kron(p.psi2.amps(), p.psi1.amps());
    std::vector<cplx> other = kron(p.psi2_perp.amps(), p.psi1_perp.amps());
    std::vector<cplx> xi(chi.size());
    for (size_t k = 0; k < chi.size(); k++) {
        chi[k] *= p.alpha;
        xi[k] = chi[k] + p.beta * other[k];
    }
    double lhs = trace_norm(Mat::outer(xi, xi) - Mat::outer(chi, chi));
    double rhs = 2 * p.beta * std::sqrt(1 - p.beta * p.beta / 2);
    return {lhs, rhs, lhs <= rhs + 1e-10};
}

}  // namespace qnc
