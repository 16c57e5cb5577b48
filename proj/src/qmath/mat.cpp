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

#include "qnc/qmath.hpp"

namespace qnc {

Mat::Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw UsageError("Mat dimensions must be positive");
    }
}

Mat::Mat(size_t rows, size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0 || entries_.size() != rows * cols) {
        throw UsageError("Mat entries do not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

Mat::Mat(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows.size() ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) {
        throw UsageError("Mat dimensions must be positive");
    }
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw UsageError("ragged Mat initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

Mat Mat::outer(std::span<const cplx> a, std::span<const cplx> b) {
    Mat m(a.size(), b.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Mat Mat::unit(size_t n, size_t i, size_t j) {
    if (i >= n || j >= n) {
        throw UsageError("matrix unit index out of range");
    }
    Mat m(n, n);
    m(i, j) = 1;
    return m;
}

Mat Mat::adjoint() const {
    Mat m(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Mat Mat::conj() const {
    Mat m = *this;
    for (auto &e : m.entries_) {
        e = std::conj(e);
    }
    return m;
}

cplx Mat::trace() const {
    if (!square()) {
        throw UsageError("trace of a non-square matrix");
    }
    cplx t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double Mat::frobenius_norm() const {
    double s = 0;
    for (const auto &e : entries_) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

bool Mat::is_hermitian(double tolerance) const {
    if (!square()) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r; c < cols_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

bool Mat::all_finite() const {
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            return false;
        }
    }
    return true;
}

static void require_same_shape(const Mat &a, const Mat &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw UsageError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

Mat &Mat::operator+=(const Mat &o) {
    require_same_shape(*this, o, "+");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += o.entries_[k];
    }
    return *this;
}

Mat &Mat::operator-=(const Mat &o) {
    require_same_shape(*this, o, "-");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= o.entries_[k];
    }
    return *this;
}

Mat &Mat::operator*=(cplx s) {
    for (auto &e : entries_) {
        e *= s;
    }
    return *this;
}

Mat operator+(Mat a, const Mat &b) {
    a += b;
    return a;
}

Mat operator-(Mat a, const Mat &b) {
    a -= b;
    return a;
}

Mat operator*(Mat a, cplx s) {
    a *= s;
    return a;
}

Mat operator*(cplx s, Mat a) {
    a *= s;
    return a;
}

Mat operator*(const Mat &a, const Mat &b) {
    if (a.cols() != b.rows()) {
        throw UsageError("matmul: inner dimensions " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    }
    Mat m(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            cplx v = a(r, k);
            if (v == cplx{}) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                m(r, c) += v * b(k, c);
            }
        }
    }
    return m;
}

std::vector<cplx> operator*(const Mat &a, std::span<const cplx> v) {
    if (a.cols() != v.size()) {
        throw UsageError("matvec: dimension mismatch");
    }
    std::vector<cplx> out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        cplx s = 0;
        for (size_t c = 0; c < a.cols(); c++) {
            s += a(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

Mat kron(const Mat &a, const Mat &b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            cplx v = a(i, j);
            if (v == cplx{}) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    m(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
                }
            }
        }
    }
    return m;
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
    std::vector<cplx> out;
    out.reserve(a.size() * b.size());
    for (auto x : a) {
        for (auto y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

Mat tensor(const Mat &a, const Mat &b) {
    return kron(a, b);
}

double max_abs_diff(const Mat &a, const Mat &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw UsageError("inner: dimension mismatch");
    }
    cplx s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

size_t qubits_for_dim(size_t dim) {
    size_t n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    if ((size_t{1} << n) != dim || n > 5) {
        throw UsageError("dimension " + std::to_string(dim) + " is not 2^n with n <= 5");
    }
    return n;
}

Mat partial_trace(const Mat &rho, std::span<const size_t> keep) {
    if (!rho.square()) {
        throw UsageError("partial_trace: non-square operator");
    }
    size_t n = qubits_for_dim(rho.rows());
    if (keep.empty()) {
        throw UsageError("partial_trace: keep set is empty");
    }
    std::vector<bool> kept(n, false);
    for (size_t q : keep) {
        if (q >= n || kept[q]) {
            throw UsageError("partial_trace: invalid or repeated qubit index " + std::to_string(q));
        }
        kept[q] = true;
    }
    std::vector<size_t> traced;
    for (size_t q = 0; q < n; q++) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }
    size_t m = keep.size();
    size_t dk = size_t{1} << m;
    size_t dt = size_t{1} << traced.size();
    auto scatter = [n](size_t value, std::span<const size_t> qubits) {
        size_t idx = 0;
        for (size_t k = 0; k < qubits.size(); k++) {
            if ((value >> (qubits.size() - 1 - k)) & 1) {
                idx |= size_t{1} << (n - 1 - qubits[k]);
            }
        }
        return idx;
    };
    std::vector<size_t> kmap(dk), tmap(dt);
    for (size_t a = 0; a < dk; a++) {
        kmap[a] = scatter(a, keep);
    }
    for (size_t t = 0; t < dt; t++) {
        tmap[t] = scatter(t, traced);
    }
    Mat out(dk, dk);
    for (size_t a = 0; a < dk; a++) {
        for (size_t b = 0; b < dk; b++) {
            cplx s = 0;
            for (size_t t = 0; t < dt; t++) {
                s += rho(kmap[a] | tmap[t], kmap[b] | tmap[t]);
            }
            out(a, b) = s;
        }
    }
    return out;
}

Mat permute_qubits(const Mat &rho, std::span<const size_t> order) {
    if (order.size() != qubits_for_dim(rho.rows())) {
        throw UsageError("permute_qubits: order must list every qubit once");
    }
    return partial_trace(rho, order);
}

namespace gates {
const Mat &I() {
    static const Mat m = Mat::identity(2);
    return m;
}
const Mat &X() {
    static const Mat m{{0, 1}, {1, 0}};
    return m;
}
const Mat &Z() {
    static const Mat m{{1, 0}, {0, -1}};
    return m;
}
const Mat &Y() {
    static const Mat m{{0, -1}, {1, 0}};
    return m;
}
const Mat &Ypauli() {
    static const Mat m{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
    return m;
}
const Mat &H() {
    static const double s = 1 / std::sqrt(2.0);
    static const Mat m{{s, s}, {s, -s}};
    return m;
}
}  // namespace gates

}  // namespace qnc
