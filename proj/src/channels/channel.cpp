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

#include "qnc/channels.hpp"

namespace qnc {

ShrinkFactor::ShrinkFactor(double value) : p(value) {
    if (!(value >= 0 && value <= 1)) {
        throw UsageError("shrink factor must lie in [0, 1]");
    }
}

namespace {

constexpr double kTpTol = 1e-10;
// Choi eigenvalues below this (relative to dim_in) carry no weight.
constexpr double kDropTol = 1e-14;

Mat kraus_sum(const std::vector<Mat> &kraus, size_t dim_in) {
    Mat s(dim_in, dim_in);
    for (const auto &k : kraus) {
        s += k.adjoint() * k;
    }
    return s;
}

Mat column(std::span<const cplx> v) {
    return Mat(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

}  // namespace

Channel::Channel(std::vector<Mat> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw UsageError("Channel needs at least one Kraus operator");
    }
    dim_out_ = kraus_.front().rows();
    dim_in_ = kraus_.front().cols();
    for (const auto &k : kraus_) {
        if (k.rows() != dim_out_ || k.cols() != dim_in_) {
            throw UsageError("Kraus operators disagree on shape");
        }
        if (!k.all_finite()) {
            throw UsageError("non-finite Kraus entry");
        }
    }
    Mat s = kraus_sum(kraus_, dim_in_);
    if ((s - Mat::identity(dim_in_)).frobenius_norm() > kTpTol) {
        throw UsageError("Kraus set is not trace preserving");
    }
}

Channel Channel::from_choi(const Mat &choi, size_t dim_in, size_t dim_out) {
    if (choi.rows() != dim_in * dim_out || !choi.square()) {
        throw UsageError("Choi matrix has the wrong dimension");
    }
    EigenSystem es = herm_eig(choi);
    if (es.values.back() < -tol::psd) {
        throw UsageError("Choi matrix is not positive: map is not completely positive");
    }
    std::vector<Mat> kraus;
    double cutoff = kDropTol * static_cast<double>(dim_in);
    for (size_t k = 0; k < es.values.size(); k++) {
        if (es.values[k] <= cutoff) {
            continue;
        }
        double w = std::sqrt(es.values[k]);
        Mat K(dim_out, dim_in);
        for (size_t i = 0; i < dim_in; i++) {
            for (size_t a = 0; a < dim_out; a++) {
                K(a, i) = w * es.vectors(i * dim_out + a, k);
            }
        }
        kraus.push_back(std::move(K));
    }
    if (kraus.empty()) {
        throw UsageError("Choi matrix is zero");
    }
    return Channel(std::move(kraus));
}

Channel Channel::from_action(size_t dim_in, size_t dim_out, const std::function<Mat(const Mat &)> &action) {
    Mat choi(dim_in * dim_out, dim_in * dim_out);
    for (size_t i = 0; i < dim_in; i++) {
        for (size_t j = 0; j < dim_in; j++) {
            Mat out = action(Mat::unit(dim_in, i, j));
            if (out.rows() != dim_out || out.cols() != dim_out) {
                throw UsageError("action returned the wrong output dimension");
            }
            for (size_t a = 0; a < dim_out; a++) {
                for (size_t b = 0; b < dim_out; b++) {
                    choi(i * dim_out + a, j * dim_out + b) = out(a, b);
                }
            }
        }
    }
    return from_choi(choi, dim_in, dim_out);
}

Channel Channel::identity(size_t dim) {
    return Channel({Mat::identity(dim)});
}

Channel Channel::unitary(const Mat &u) {
    return Channel({u});
}

Channel Channel::prepare(const Mat &sigma, size_t dim_in) {
    EigenSystem es = herm_eig(sigma);
    std::vector<Mat> kraus;
    for (size_t k = 0; k < es.values.size(); k++) {
        if (es.values[k] <= kDropTol) {
            continue;
        }
        std::vector<cplx> v(sigma.rows());
        for (size_t r = 0; r < v.size(); r++) {
            v[r] = es.vectors(r, k) * std::sqrt(es.values[k]);
        }
        for (size_t i = 0; i < dim_in; i++) {
            std::vector<cplx> e(dim_in);
            e[i] = 1;
            kraus.push_back(Mat::outer(v, e));
        }
    }
    return Channel(std::move(kraus));
}

Mat Channel::apply(const Mat &rho) const {
    if (rho.rows() != dim_in_ || !rho.square()) {
        throw UsageError("channel input has dimension " + std::to_string(rho.rows()) + ", expected " +
                         std::to_string(dim_in_));
    }
    Mat out(dim_out_, dim_out_);
    for (const auto &k : kraus_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

DensityOp Channel::apply(const DensityOp &rho) const {
    return DensityOp(apply(rho.mat()));
}

Mat Channel::apply_leading(const Mat &rho) const {
    if (!rho.square() || rho.rows() % dim_in_ != 0) {
        throw UsageError("apply_leading: input dimension is not a multiple of dim_in");
    }
    size_t rest = rho.rows() / dim_in_;
    size_t D = rho.rows();
    size_t Do = dim_out_ * rest;
    Mat out(Do, Do);
    Mat t(Do, D);
    for (const auto &K : kraus_) {
        // t = (K (x) I) rho
        for (size_t a = 0; a < dim_out_; a++) {
            for (size_t r = 0; r < rest; r++) {
                for (size_t col = 0; col < D; col++) {
                    cplx s = 0;
                    for (size_t i = 0; i < dim_in_; i++) {
                        s += K(a, i) * rho(i * rest + r, col);
                    }
                    t(a * rest + r, col) = s;
                }
            }
        }
        // out += t (K (x) I)^dag
        for (size_t row = 0; row < Do; row++) {
            for (size_t b = 0; b < dim_out_; b++) {
                for (size_t s = 0; s < rest; s++) {
                    cplx acc = 0;
                    for (size_t j = 0; j < dim_in_; j++) {
                        acc += t(row, j * rest + s) * std::conj(K(b, j));
                    }
                    out(row, b * rest + s) += acc;
                }
            }
        }
    }
    return out;
}

Mat Channel::choi() const {
    size_t n = dim_in_ * dim_out_;
    Mat J(n, n);
    for (const auto &K : kraus_) {
        for (size_t i = 0; i < dim_in_; i++) {
            for (size_t a = 0; a < dim_out_; a++) {
                cplx v = K(a, i);
                if (v == cplx{}) {
                    continue;
                }
                for (size_t j = 0; j < dim_in_; j++) {
                    for (size_t b = 0; b < dim_out_; b++) {
                        J(i * dim_out_ + a, j * dim_out_ + b) += v * std::conj(K(b, j));
                    }
                }
            }
        }
    }
    return J;
}

Channel Channel::compact() const {
    if (kraus_.size() <= 1) {
        return *this;
    }
    return from_choi(choi(), dim_in_, dim_out_);
}

static Channel maybe_compact(std::vector<Mat> kraus) {
    Channel c(std::move(kraus));
    if (c.kraus().size() > c.dim_in() * c.dim_out()) {
        return c.compact();
    }
    return c;
}

Channel compose(const Channel &outer, const Channel &inner) {
    if (outer.dim_in() != inner.dim_out()) {
        throw UsageError("compose: dimension mismatch");
    }
    std::vector<Mat> kraus;
    for (const auto &a : outer.kraus()) {
        for (const auto &b : inner.kraus()) {
            Mat k = a * b;
            if (k.frobenius_norm() > 1e-15) {
                kraus.push_back(std::move(k));
            }
        }
    }
    return maybe_compact(std::move(kraus));
}

Channel tensor(const Channel &a, const Channel &b) {
    std::vector<Mat> kraus;
    for (const auto &x : a.kraus()) {
        for (const auto &y : b.kraus()) {
            kraus.push_back(kron(x, y));
        }
    }
    return maybe_compact(std::move(kraus));
}

Channel mixture(const std::vector<Weighted> &parts) {
    if (parts.empty()) {
        throw UsageError("mixture of nothing");
    }
    double total = 0;
    std::vector<Mat> kraus;
    for (const auto &p : parts) {
        if (p.weight < 0) {
            throw UsageError("negative mixture weight");
        }
        if (p.channel.dim_in() != parts.front().channel.dim_in() ||
            p.channel.dim_out() != parts.front().channel.dim_out()) {
            throw UsageError("mixture: dimension mismatch");
        }
        total += p.weight;
        if (p.weight == 0) {
            continue;
        }
        for (const auto &k : p.channel.kraus()) {
            kraus.push_back(k * std::sqrt(p.weight));
        }
    }
    if (std::abs(total - 1) > 1e-12) {
        throw UsageError("mixture weights must sum to 1");
    }
    return maybe_compact(std::move(kraus));
}

Channel trace_output(const Channel &c, std::span<const size_t> keep) {
    size_t n = qubits_for_dim(c.dim_out());
    std::vector<bool> kept(n, false);
    for (size_t q : keep) {
        if (q >= n || kept[q]) {
            throw UsageError("trace_output: invalid or repeated qubit");
        }
        kept[q] = true;
    }
    if (keep.empty()) {
        throw UsageError("trace_output: keep set is empty");
    }
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }
    auto scatter = [n](size_t value, std::span<const size_t> qubits) {
        size_t idx = 0;
        for (size_t k = 0; k < qubits.size(); k++) {
            if ((value >> (qubits.size() - 1 - k)) & 1) {
                idx |= size_t{1} << (n - 1 - qubits[k]);
            }
        }
        return idx;
    };
    size_t dk = size_t{1} << keep.size();
    size_t dt = size_t{1} << traced.size();
    std::vector<Mat> kraus;
    for (const auto &K : c.kraus()) {
        for (size_t t = 0; t < dt; t++) {
            size_t tbits = scatter(t, traced);
            Mat k(dk, c.dim_in());
            for (size_t a = 0; a < dk; a++) {
                size_t row = scatter(a, keep) | tbits;
                for (size_t i = 0; i < c.dim_in(); i++) {
                    k(a, i) = K(row, i);
                }
            }
            if (k.frobenius_norm() > 1e-15) {
                kraus.push_back(std::move(k));
            }
        }
    }
    return maybe_compact(std::move(kraus));
}

Channel trace_output(const Channel &c, std::initializer_list<size_t> keep) {
    return trace_output(c, std::span<const size_t>(keep.begin(), keep.size()));
}

static Channel bind(const Channel &c, const Mat &sigma, bool first) {
    size_t ds = sigma.rows();
    if (!sigma.square() || c.dim_in() % ds != 0) {
        throw UsageError("bind: fixed state does not divide the channel input");
    }
    size_t dr = c.dim_in() / ds;
    EigenSystem es = herm_eig(sigma);
    std::vector<Mat> kraus;
    for (size_t k = 0; k < ds; k++) {
        if (es.values[k] <= kDropTol) {
            continue;
        }
        std::vector<cplx> v(ds);
        for (size_t r = 0; r < ds; r++) {
            v[r] = es.vectors(r, k) * std::sqrt(es.values[k]);
        }
        Mat embed = first ? kron(column(v), Mat::identity(dr)) : kron(Mat::identity(dr), column(v));
        for (const auto &K : c.kraus()) {
            kraus.push_back(K * embed);
        }
    }
    return maybe_compact(std::move(kraus));
}

Channel bind_first(const Channel &c, const Mat &sigma) {
    return bind(c, sigma, true);
}

Channel bind_last(const Channel &c, const Mat &sigma) {
    return bind(c, sigma, false);
}

Mat apply_on_qubits(const Channel &c, const Mat &rho, std::span<const size_t> targets) {
    size_t n = qubits_for_dim(rho.rows());
    if ((size_t{1} << targets.size()) != c.dim_in()) {
        throw UsageError("apply_on_qubits: target count does not match the channel input");
    }
    std::vector<bool> used(n, false);
    std::vector<size_t> order(targets.begin(), targets.end());
    for (size_t q : targets) {
        if (q >= n || used[q]) {
            throw UsageError("apply_on_qubits: invalid or repeated target");
        }
        used[q] = true;
    }
    for (size_t q = 0; q < n; q++) {
        if (!used[q]) {
            order.push_back(q);
        }
    }
    bool identity_order = true;
    for (size_t q = 0; q < n; q++) {
        identity_order &= order[q] == q;
    }
    if (identity_order) {
        return c.apply_leading(rho);
    }
    return c.apply_leading(permute_qubits(rho, order));
}

Mat apply_on_qubits(const Channel &c, const Mat &rho, std::initializer_list<size_t> targets) {
    return apply_on_qubits(c, rho, std::span<const size_t>(targets.begin(), targets.size()));
}

ChannelCheck check_channel(const Channel &c) {
    return {herm_eig(c.choi()).values.back(),
            (kraus_sum(c.kraus(), c.dim_in()) - Mat::identity(c.dim_in())).frobenius_norm()};
}

Mat sqrt_psd(const Mat &m) {
    EigenSystem es = herm_eig(m);
    size_t n = m.rows();
    Mat out(n, n);
    for (size_t k = 0; k < n; k++) {
        double l = es.values[k];
        if (l < -tol::psd) {
            throw UsageError("sqrt_psd: matrix is not positive");
        }
        if (l <= 0) {
            continue;
        }
        double s = std::sqrt(l);
        for (size_t r = 0; r < n; r++) {
            for (size_t col = 0; col < n; col++) {
                out(r, col) += s * es.vectors(r, k) * std::conj(es.vectors(col, k));
            }
        }
    }
    return out;
}

Povm::Povm(std::vector<Element> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw UsageError("empty POVM");
    }
    size_t d = elements_.front().effect.rows();
    Mat s(d, d);
    for (const auto &e : elements_) {
        if (!e.effect.square() || e.effect.rows() != d) {
            throw UsageError("POVM elements disagree on dimension");
        }
        if (herm_eig(e.effect).values.back() < -tol::psd) {
            throw UsageError("POVM element " + e.label + " is not positive");
        }
        s += e.effect;
    }
    if ((s - Mat::identity(d)).frobenius_norm() > 1e-10) {
        throw UsageError("POVM elements do not sum to the identity");
    }
}

std::vector<double> Povm::probabilities(const Mat &rho) const {
    std::vector<double> p;
    p.reserve(elements_.size());
    for (const auto &e : elements_) {
        p.push_back((e.effect * rho).trace().real());
    }
    return p;
}

Channel Povm::as_channel() const {
    size_t d = dim();
    size_t m = size();
    std::vector<Mat> kraus;
    for (size_t r = 0; r < m; r++) {
        Mat root = sqrt_psd(elements_[r].effect);
        for (size_t k = 0; k < d; k++) {
            Mat K(m, d);
            for (size_t i = 0; i < d; i++) {
                K(r, i) = root(k, i);
            }
            if (K.frobenius_norm() > 1e-15) {
                kraus.push_back(std::move(K));
            }
        }
    }
    return maybe_compact(std::move(kraus));
}

Instrument::Instrument(std::vector<Branch> branches) : branches_(std::move(branches)) {
    if (branches_.empty() || branches_.front().kraus.empty()) {
        throw UsageError("empty instrument");
    }
    std::vector<Mat> all;
    for (const auto &b : branches_) {
        all.insert(all.end(), b.kraus.begin(), b.kraus.end());
    }
    // Validates trace preservation of the folded map.
    Channel check(std::move(all));
    (void)check;
}

Channel Instrument::fold() const {
    std::vector<Mat> all;
    for (const auto &b : branches_) {
        all.insert(all.end(), b.kraus.begin(), b.kraus.end());
    }
    return maybe_compact(std::move(all));
}

Instrument feedforward(const Povm &povm, size_t data_dim, const std::function<Channel(size_t)> &act) {
    size_t dk = povm.dim();
    std::vector<Instrument::Branch> branches;
    for (size_t r = 0; r < povm.size(); r++) {
        Mat root = sqrt_psd(povm.elements()[r].effect);
        Channel f = act(r);
        if (f.dim_in() != data_dim) {
            throw UsageError("feedforward: action has the wrong input dimension");
        }
        Instrument::Branch br{povm.elements()[r].label, {}};
        for (size_t k = 0; k < dk; k++) {
            // <k| sqrt(E_r) as a row
            Mat row(1, dk);
            for (size_t i = 0; i < dk; i++) {
                row(0, i) = root(k, i);
            }
            if (row.frobenius_norm() <= 1e-15) {
                continue;
            }
            for (const auto &F : f.kraus()) {
                br.kraus.push_back(kron(F, row));
            }
        }
        branches.push_back(std::move(br));
    }
    return Instrument(std::move(branches));
}

}  // namespace qnc
