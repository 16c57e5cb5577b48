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

#ifndef QNC_PROTOCOLS_HPP
#define QNC_PROTOCOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qnc/channels.hpp"

namespace qnc {

/// Named qubit registers over one dense operator. Slot 0 is the leftmost factor.
/// Works on arbitrary operators, not only states, so protocols stay linear.
class RegisterMap {
   public:
    RegisterMap() = default;

    /// Appends registers holding rho on the right.
    void add(const Mat &rho, std::vector<std::string> names);
    /// Applies c to the named registers; outputs get the new names.
    void apply(const Channel &c, const std::vector<std::string> &in, std::vector<std::string> out);
    void discard(const std::vector<std::string> &names);
    /// Reduced operator on the named registers, in the given order.
    Mat marginal(const std::vector<std::string> &names) const;

    size_t slot(const std::string &name) const;
    const std::vector<std::string> &names() const { return names_; }
    const Mat &op() const { return op_; }

   private:
    std::vector<size_t> slots(const std::vector<std::string> &names) const;

    Mat op_;
    std::vector<std::string> names_;
};

enum class ProtocolId { xqq, xqc, x2c2c, x3c3c, classical, xq3 };
std::string_view protocol_name(ProtocolId id);
/// Throws UsageError on unknown names.
ProtocolId parse_protocol(std::string_view name);

struct Bits {
    unsigned value;
    unsigned width;
};
using SourceInput = std::variant<PureState, Bits>;

struct ProtocolInput {
    std::vector<SourceInput> sources;
    /// Adversary indices, 1-based; they only pick the sink measurement basis.
    unsigned i1 = 1;
    unsigned i2 = 1;
    /// XQC only: mix in the random-bit branch.
    bool averaged = false;
};

enum class ValueKind { fidelity, success_probability };
std::string_view value_kind_name(ValueKind k);

struct SinkValue {
    std::string sink;
    ValueKind kind;
    double value;
};

/// Exact per-sink values for one input.
std::vector<SinkValue> exact_values(ProtocolId id, const ProtocolInput &input);

// ---- protocols ----------------------------------------------------------------

struct XqqOutputs {
    DensityOp rho1;
    DensityOp rho2;
};
XqqOutputs run_xqq(const PureState &psi1, const PureState &psi2);

struct XqcOutputs {
    DensityOp rho1;
    double p_success_t2;
};
XqcOutputs run_xqc(const PureState &psi, unsigned b, bool averaged);

std::pair<double, double> run_x2c2c(unsigned x, unsigned y, unsigned i1, unsigned i2);
std::pair<double, double> run_x3c3c(unsigned x, unsigned y, unsigned i1, unsigned i2);
std::pair<unsigned, unsigned> run_classical_butterfly(unsigned x, unsigned y);
std::vector<double> run_xqk(unsigned k, const std::vector<PureState> &states);

/// Probability that basis j (1-based) applied to Q6 alone yields bit j of x xor y.
double x2c2c_q6_decode(unsigned x, unsigned y, unsigned j);
double x3c3c_q6_decode(unsigned x, unsigned y, unsigned j);
/// State of Q5 in X3C3C.
DensityOp x3c3c_q5_state(unsigned x, unsigned y);

/// Linear sink maps: every argument may be any operator, so these can be
/// probed on matrix units.
namespace linear {
Mat xqq_sink1(const Mat &in1, const Mat &in2);
Mat xqq_sink2(const Mat &in1, const Mat &in2);
Mat xqc_sink1(const Mat &in, unsigned b, bool averaged);
double xqc_success(const Mat &in, unsigned b, bool averaged);
/// Sink j (0-based) of XQ^3.
Mat xq3_sink(unsigned j, const Mat &in1, const Mat &in2, const Mat &in3);
}  // namespace linear

/// Stage maps of XQQ, for the lemma checks. C maps act on the s1 state with
/// rho2 fixed, D maps act on the s2 state with rho1 fixed.
namespace xqq_stages {
/// rho -> GR(rho, TTR(Q3)) with Q3 the second cloner output of rho2.
Channel c2(const Mat &rho2);
/// The universal-cloner marginal.
Channel c3();
/// rho1 -> t1 output after s0 and t1 but with t0 removed.
Channel c4c2(const Mat &rho2);
/// rho -> GR(Q2, TTR(rho)) with Q2 the second cloner output of rho1.
Channel d2(const Mat &rho1);
Channel d3();
/// psi2 -> BM(Q1, GR(Q2, TTR(psi2))) with (Q1, Q2) cloned from rho1.
Channel d4d2(const Mat &rho1);
/// The full s1 -> t1 map for fixed rho2.
Channel s1t1(const Mat &rho2);
/// The full s2 -> t2 map for fixed rho1.
Channel s2t2(const Mat &rho1);
}  // namespace xqq_stages

// ---- sampler ------------------------------------------------------------------

struct TrajectoryStats {
    uint64_t shots;
    uint64_t seed;
    std::vector<std::string> sinks;
    std::vector<uint64_t> successes;
    std::vector<double> frequency;
    std::vector<double> standard_error;
};

/// Monte-Carlo unraveling with explicit measurements and feed-forward.
/// Sink values are per-shot Bernoulli outcomes: decoded bit correct, or the
/// output passing a {psi, psi-perp} test.
TrajectoryStats sample(ProtocolId id, const ProtocolInput &input, uint64_t shots, uint64_t seed);

}  // namespace qnc

#endif
