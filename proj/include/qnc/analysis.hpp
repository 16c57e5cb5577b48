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

#ifndef QNC_ANALYSIS_HPP
#define QNC_ANALYSIS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qnc/channels.hpp"
#include "qnc/protocols.hpp"

namespace qnc {

/// Matrix on row-major vectorized operators: column a*din + b is vec(E(|a><b|)).
class Superop {
   public:
    Superop(Mat m, size_t dim_in, size_t dim_out);

    size_t dim_in() const { return dim_in_; }
    size_t dim_out() const { return dim_out_; }
    const Mat &mat() const { return m_; }
    Mat apply(const Mat &rho) const;

   private:
    Mat m_;
    size_t dim_in_;
    size_t dim_out_;
};

Superop tomography(const Channel &c);
/// Exact for any linear map; dim_out may be 1 for linear functionals.
Superop tomography(size_t dim_in, size_t dim_out, const std::function<Mat(const Mat &)> &map);
Channel channel_from_superop(const Superop &s);
/// outer after inner.
Superop compose(const Superop &outer, const Superop &inner);
double frobenius_distance(const Superop &a, const Superop &b);

/// p with ||s - depolarize(p)||_F <= tol, if the map has that form.
std::optional<double> detect_shrink(const Superop &s, double tol = 1e-9);
/// ||a.b - b.a||_F on superoperators.
double verify_commutation(const Channel &a, const Channel &b);

// ---- worst-case search ----------------------------------------------------------

struct SourceAngles {
    double theta1;
    double theta2;
};

/// A sink value that is linear in the joint projector of the free sources.
/// With a target source the value is <psi_target| map(rho) |psi_target>,
/// otherwise map has a 1x1 output and the value is that entry.
struct SinkObjective {
    Superop map;
    size_t nsources;
    std::optional<size_t> target;
};

double evaluate(const SinkObjective &obj, const std::vector<SourceAngles> &angles);

struct SearchOptions {
    size_t n1 = 64;
    size_t n2 = 32;
    double refine_tol = 1e-12;
    int max_depth = 20;
    /// 0 keeps the OpenMP default.
    int jobs = 0;
};

struct FidelitySearchResult {
    double min_value;
    /// Largest grid value, to expose input dependence.
    double max_value;
    std::vector<SourceAngles> argmin;
    size_t n1;
    size_t n2;
    int depth;
    bool converged;
};

/// Joint grid over theta1 in [0, pi] (endpoints included) and theta2 in [0, 2pi)
/// for every source, then 3x3-per-source local refinement shrinking by 4.
FidelitySearchResult worst_case_fidelity(const SinkObjective &obj, const SearchOptions &opt = {});
/// Same search on one thread; results are bit-identical.
FidelitySearchResult worst_case_fidelity_serial(const SinkObjective &obj, const SearchOptions &opt = {});

/// Objective of one sink of a protocol; classical sources are read from fixed.
SinkObjective sink_objective(ProtocolId id, size_t sink, const ProtocolInput &fixed = {});

// ---- lemma checks ---------------------------------------------------------------

/// Max error between POVM probabilities and the four closed forms.
double verify_tetra_closed_form(double theta1, double theta2);
/// Max error of the Bell-outcome pattern for one pure rho1.
double verify_bell_table(const DensityOp &rho1);
/// Over the six axis states and 100 seeded random states.
double verify_bell_table();

struct Stage2Residuals {
    /// ||D(I/2) - I/2||
    double identity_residual;
    /// max |F - (1/2 + sqrt3/54)| over the grid.
    double fidelity_error;
    /// Same after depolarize(4/9), against 1/2 + 2 sqrt3/243.
    double composed_error;
};
/// The s2 -> t2 map without the middle cloner, for fixed pure rho1.
Stage2Residuals verify_xqq_stage2(const DensityOp &rho1);

struct CheckResult {
    std::string anchor;
    std::string detail;
    double residual;
    double tol;
    bool pass;
};

enum class Suite { lemmas, tables, protocols, all };
Suite parse_suite(std::string_view name);
/// tol <= 0 keeps each check's own tolerance.
std::vector<CheckResult> run_suite(Suite s, double tol = 0, int jobs = 0);

}  // namespace qnc

#endif
