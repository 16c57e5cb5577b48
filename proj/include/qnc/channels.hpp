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

#ifndef QNC_CHANNELS_HPP
#define QNC_CHANNELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "qnc/qmath.hpp"

namespace qnc {

struct ShrinkFactor {
    double p;
    explicit ShrinkFactor(double value);
};

/// Completely positive trace-preserving map as a Kraus list.
class Channel {
   public:
    /// Every operator must be dim_out x dim_in and the set must be trace preserving.
    explicit Channel(std::vector<Mat> kraus);

    /// J = sum_ij |i><j| (x) E(|i><j|); Kraus operators come from its eigenvectors.
    static Channel from_choi(const Mat &choi, size_t dim_in, size_t dim_out);
    /// Builds the channel from its action on matrix units.
    static Channel from_action(size_t dim_in, size_t dim_out, const std::function<Mat(const Mat &)> &action);
    static Channel identity(size_t dim);
    static Channel unitary(const Mat &u);
    /// Discards the input and prepares sigma.
    static Channel prepare(const Mat &sigma, size_t dim_in);

    size_t dim_in() const { return dim_in_; }
    size_t dim_out() const { return dim_out_; }
    const std::vector<Mat> &kraus() const { return kraus_; }

    Mat apply(const Mat &rho) const;
    DensityOp apply(const DensityOp &rho) const;
    /// Acts on the leading dim_in factor of rho and as the identity on the rest.
    Mat apply_leading(const Mat &rho) const;
    Mat choi() const;
    /// Same map with a minimal Kraus set.
    Channel compact() const;

   private:
    std::vector<Mat> kraus_;
    size_t dim_in_;
    size_t dim_out_;
};

/// outer after inner.
Channel compose(const Channel &outer, const Channel &inner);
Channel tensor(const Channel &a, const Channel &b);

struct Weighted {
    double weight;
    Channel channel;
};
/// Convex combination; Kraus sets are scaled by sqrt(weight).
Channel mixture(const std::vector<Weighted> &parts);

/// Keeps the listed output qubits, in the listed order.
Channel trace_output(const Channel &c, std::span<const size_t> keep);
Channel trace_output(const Channel &c, std::initializer_list<size_t> keep);
/// rho -> c(sigma (x) rho)
Channel bind_first(const Channel &c, const Mat &sigma);
/// rho -> c(rho (x) sigma)
Channel bind_last(const Channel &c, const Mat &sigma);

/// Applies c to the listed qubits of rho. The channel's output qubits come first
/// in the result, followed by the untouched qubits in their original order.
Mat apply_on_qubits(const Channel &c, const Mat &rho, std::span<const size_t> targets);
Mat apply_on_qubits(const Channel &c, const Mat &rho, std::initializer_list<size_t> targets);

/// Smallest Choi eigenvalue and the TP residual ||sum K^dag K - I||_F.
struct ChannelCheck {
    double min_choi_eigenvalue;
    double tp_residual;
};
ChannelCheck check_channel(const Channel &c);

/// Principal square root of a PSD matrix.
Mat sqrt_psd(const Mat &m);

class Povm {
   public:
    struct Element {
        std::string label;
        Mat effect;
    };
    explicit Povm(std::vector<Element> elements);

    const std::vector<Element> &elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    size_t dim() const { return elements_.front().effect.rows(); }
    std::vector<double> probabilities(const Mat &rho) const;
    /// rho -> sum_r Tr(E_r rho) |r><r| on an outcome register of dimension size().
    Channel as_channel() const;

   private:
    std::vector<Element> elements_;
};

/// Measure-then-act before folding: branch r keeps its Kraus fragment.
class Instrument {
   public:
    struct Branch {
        std::string label;
        std::vector<Mat> kraus;
    };
    explicit Instrument(std::vector<Branch> branches);

    const std::vector<Branch> &branches() const { return branches_; }
    size_t dim_in() const { return branches_.front().kraus.front().cols(); }
    Channel fold() const;

   private:
    std::vector<Branch> branches_;
};

/// Input (data (x) key). Measures key with povm, then applies act(r) to data.
Instrument feedforward(const Povm &povm, size_t data_dim, const std::function<Channel(size_t)> &act);

// ---- primitives -------------------------------------------------------------

/// Symmetric universal cloner, 1 qubit to 2.
Channel uc_clone();
/// Explicit two-qubit output of the universal cloner written out entrywise.
DensityOp uc_pair_state(const DensityOp &rho);
Channel depolarize(ShrinkFactor p);
/// Phase-covariant cloner for the real-amplitude great circle.
Channel pc_clone();

/// Tetrahedral states chi(r1 r2), r = 2 r1 + r2.
PureState tetra_state(unsigned r);
Povm ttr_povm();
Channel ttr_channel();

/// I, Z, X, Y for keys 00, 01, 10, 11.
const Mat &gr_unitary(unsigned key);
DensityOp gr_apply(const DensityOp &rho, unsigned key);
/// (data, key source) -> data after GR(data, TTR(key source)).
Channel gr_ttr_channel();

enum class VPair { IZ, XY, IX, YZ, IY, ZX };
Channel v_twirl_channel(VPair which);
Mat v_twirl(VPair which, const Mat &rho);
DensityOp v_twirl(VPair which, const DensityOp &rho);

/// Phi+, Phi-, Psi+, Psi- for k = 0..3.
PureState bell_state(unsigned k);
/// One of the three equally weighted measure-and-prepare branches (0, 1, 2).
Channel bm_branch(unsigned branch);
Channel bm_channel();

/// (|0> + i|1>)/sqrt2 and (|0> - i|1>)/sqrt2.
PureState plus_prime();
PureState minus_prime();

enum class Basis { Z, X, Y };
PureState basis_state(Basis b, unsigned bit);
Povm basis_povm(Basis b);

PureState qra2_state(unsigned x);
PureState qra3_state(unsigned x);
Povm mm2_povm();
Povm mm3_povm();

Channel inv_prime_channel();
DensityOp inv_prime(const DensityOp &rho);
Channel ag_channel(unsigned key);
DensityOp ag_apply(const DensityOp &rho, unsigned key);

/// Depolarizing map on the second qubit of a two-qubit state.
DensityOp shrink_on_second(ShrinkFactor p, const DensityOp &rho12);

/// CNOT onto a fresh |0> ancilla: |k> -> |kk>.
Channel classical_copy();

}  // namespace qnc

#endif
