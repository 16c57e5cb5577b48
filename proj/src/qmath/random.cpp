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

#include "qnc/random.hpp"

#include <cmath>
#include <numbers>

namespace qnc {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed, uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

double Rng::normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

cplx Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

PureState random_pure_state(Rng &rng, size_t nqubits) {
    std::vector<cplx> v(size_t{1} << nqubits);
    for (auto &a : v) {
        a = rng.complex_normal();
    }
    return PureState::normalized(std::move(v));
}

DensityOp random_density(Rng &rng, size_t nqubits) {
    size_t d = size_t{1} << nqubits;
    Mat g(d, d);
    for (auto &a : g.data()) {
        a = rng.complex_normal();
    }
    Mat m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityOp((m + m.adjoint()) * 0.5);
}

Mat random_hermitian(Rng &rng, size_t dim) {
    Mat g(dim, dim);
    for (auto &a : g.data()) {
        a = rng.complex_normal();
    }
    return (g + g.adjoint()) * 0.5;
}

Channel random_channel(Rng &rng, size_t dim_in, size_t dim_out) {
    size_t n = dim_in * dim_out;
    Mat g(n, n);
    for (auto &a : g.data()) {
        a = rng.complex_normal();
    }
    Mat J = g * g.adjoint();
    // Input marginal Tr_out J, then J -> (W (x) I) J (W (x) I) with W = marginal^{-1/2}.
    Mat marg(dim_in, dim_in);
    for (size_t i = 0; i < dim_in; i++) {
        for (size_t j = 0; j < dim_in; j++) {
            for (size_t a = 0; a < dim_out; a++) {
                marg(i, j) += J(i * dim_out + a, j * dim_out + a);
            }
        }
    }
    EigenSystem es = herm_eig(marg);
    Mat w(dim_in, dim_in);
    for (size_t k = 0; k < dim_in; k++) {
        double s = 1 / std::sqrt(es.values[k]);
        for (size_t r = 0; r < dim_in; r++) {
            for (size_t c = 0; c < dim_in; c++) {
                w(r, c) += s * es.vectors(r, k) * std::conj(es.vectors(c, k));
            }
        }
    }
    Mat W = kron(w, Mat::identity(dim_out));
    Mat Jn = W * J * W;
    return Channel::from_choi((Jn + Jn.adjoint()) * 0.5, dim_in, dim_out);
}

}  // namespace qnc
