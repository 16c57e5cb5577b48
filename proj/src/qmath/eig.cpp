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
#include <numeric>

#include "qnc/qmath.hpp"

namespace qnc {

namespace {

double off_diagonal_mass(const Mat &a) {
    double s = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). J = D R with D a phase on q
// making a(p,q) real and R the usual real rotation.
void rotate(Mat &a, Mat &v, size_t p, size_t q) {
    cplx apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0) {
        return;
    }
    cplx phase = std::conj(apq) / mag;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * mag);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    cplx jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;
    size_t n = a.rows();
    for (size_t k = 0; k < n; k++) {
        cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (size_t k = 0; k < n; k++) {
        cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (size_t k = 0; k < n; k++) {
        cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

}  // namespace

EigenSystem herm_eig(const Mat &m) {
    if (!m.square() || m.rows() > 32) {
        throw UsageError("herm_eig: need a square matrix of dimension <= 32");
    }
    if (!m.is_hermitian(tol::herm)) {
        throw UsageError("herm_eig: matrix is not Hermitian");
    }
    size_t n = m.rows();
    // Symmetrize so round-off in the input cannot stall the sweep.
    Mat a = (m + m.adjoint()) * 0.5;
    Mat v = Mat::identity(n);
    double threshold = 1e-14 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 100 && off_diagonal_mass(a) >= threshold; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return a(i, i).real() > a(j, j).real(); });
    EigenSystem out{std::vector<double>(n), Mat(n, n)};
    for (size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

double trace_norm(const Mat &hermitian) {
    double s = 0;
    for (double e : herm_eig(hermitian).values) {
        s += std::abs(e);
    }
    return s;
}

}  // namespace qnc
