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

#include "qnc/analysis.hpp"

namespace qnc {

Superop::Superop(Mat m, size_t dim_in, size_t dim_out) : m_(std::move(m)), dim_in_(dim_in), dim_out_(dim_out) {
    if (m_.rows() != dim_out * dim_out || m_.cols() != dim_in * dim_in) {
        throw UsageError("Superop: matrix shape does not match the dimensions");
    }
}

Mat Superop::apply(const Mat &rho) const {
    if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
        throw UsageError("Superop::apply: dimension mismatch");
    }
    std::vector<cplx> out = m_ * std::span<const cplx>(rho.data());
    return Mat(dim_out_, dim_out_, std::move(out));
}

Superop tomography(size_t dim_in, size_t dim_out, const std::function<Mat(const Mat &)> &map) {
    if (dim_in > 8 || dim_out > 8) {
        throw UsageError("tomography: dimensions above 8 are not supported");
    }
    Mat m(dim_out * dim_out, dim_in * dim_in);
    for (size_t a = 0; a < dim_in; a++) {
        for (size_t b = 0; b < dim_in; b++) {
            Mat img = map(Mat::unit(dim_in, a, b));
            if (img.rows() != dim_out || img.cols() != dim_out) {
                throw UsageError("tomography: map output has the wrong dimension");
            }
            for (size_t r = 0; r < dim_out * dim_out; r++) {
                m(r, a * dim_in + b) = img.data()[r];
            }
        }
    }
    return Superop(std::move(m), dim_in, dim_out);
}

Superop tomography(const Channel &c) {
    return tomography(c.dim_in(), c.dim_out(), [&](const Mat &x) { return c.apply(x); });
}

Channel channel_from_superop(const Superop &s) {
    size_t din = s.dim_in(), dout = s.dim_out();
    Mat j(din * dout, din * dout);
    for (size_t i = 0; i < din; i++) {
        for (size_t k = 0; k < din; k++) {
            for (size_t a = 0; a < dout; a++) {
                for (size_t b = 0; b < dout; b++) {
                    j(i * dout + a, k * dout + b) = s.mat()(a * dout + b, i * din + k);
                }
            }
        }
    }
    return Channel::from_choi(j, din, dout);
}

Superop compose(const Superop &outer, const Superop &inner) {
    if (outer.dim_in() != inner.dim_out()) {
        throw UsageError("compose: dimension mismatch");
    }
    return Superop(outer.mat() * inner.mat(), inner.dim_in(), outer.dim_out());
}

double frobenius_distance(const Superop &a, const Superop &b) {
    if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
        throw UsageError("frobenius_distance: dimension mismatch");
    }
    return (a.mat() - b.mat()).frobenius_norm();
}

std::optional<double> detect_shrink(const Superop &s, double tol) {
    if (s.dim_in() != 2 || s.dim_out() != 2) {
        throw UsageError("detect_shrink: one-qubit maps only");
    }
    double p = 0;
    for (const Mat *pauli : {&gates::X(), &gates::Ypauli(), &gates::Z()}) {
        p += (*pauli * s.apply(*pauli)).trace().real();
    }
    p /= 6;
    if (p < -tol || p > 1 + tol) {
        return std::nullopt;
    }
    double clamped = std::clamp(p, 0.0, 1.0);
    if (frobenius_distance(s, tomography(depolarize(ShrinkFactor(clamped)))) > tol) {
        return std::nullopt;
    }
    return clamped;
}

double verify_commutation(const Channel &a, const Channel &b) {
    if (a.dim_in() != a.dim_out() || b.dim_in() != b.dim_out() || a.dim_in() != b.dim_in()) {
        throw UsageError("verify_commutation: maps must share one square dimension");
    }
    Superop sa = tomography(a), sb = tomography(b);
    return frobenius_distance(compose(sa, sb), compose(sb, sa));
}

}  // namespace qnc
