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

#ifndef QNC_BOUNDS_HPP
#define QNC_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "qnc/analysis.hpp"
#include "qnc/random.hpp"

namespace qnc {

enum class BoundVariant { thm4, thm3 };

/// 3/2 + e - sqrt(9/4 + e^2 - 5e), halved for thm3. Throws std::domain_error
/// outside [0, 1/2] or on a negative radicand.
double f_eps(double eps, BoundVariant v);

struct BoundsSolution {
    double epsilon_star;
    double fidelity_bound;
    std::string solver;
    double resolution;
};

/// Right side of the bit-copy inequality at (eps, |beta|).
double thm4_rhs(double eps, double beta);
/// Whether some admissible |beta| (|beta|^2 <= f/2, capped at 1/2) satisfies
/// the inequality; |beta| is scanned with the given step plus the endpoint.
bool thm4_satisfiable(double eps, double beta_step = 1e-4);
/// Smallest eps at which the inequality becomes satisfiable.
BoundsSolution solve_thm4(double resolution = 1e-6, double beta_step = 1e-4);

/// 1 - 4 sqrt(eps) - 6 eps and 2 sqrt(f) + 3 f with the halved f.
double thm3_lhs(double eps);
double thm3_rhs(double eps);
BoundsSolution solve_thm3(double resolution = 1e-6);

/// Bloch-vector action r -> T r + d of a one-qubit channel.
struct AffineMap {
    std::array<std::array<double, 3>, 3> t;
    std::array<double, 3> d;
};
AffineMap affine_of(const Channel &c);

struct EllipsoidSummary {
    /// Descending.
    std::array<double, 3> semiaxes;
    BlochVec center;
};
EllipsoidSummary ellipsoid_of(const Channel &c);

struct NiuGriffiths {
    /// Shortest semiaxis of the first marginal image.
    double l1;
    /// Longest semiaxis of the second marginal image.
    double l2;
    bool holds;
};
NiuGriffiths check_niu_griffiths(const Channel &broadcast, double tol = 1e-9);

/// Trace distance between the images of the Bloch ball under c0 and c1,
/// by projected gradient descent on ball x ball.
double image_distance(const Channel &c0, const Channel &c1);
/// Min over an n x n angle grid of pure-state pairs; an upper bound on the above.
double image_distance_grid(const Channel &c0, const Channel &c1, size_t n = 24);

struct SchmidtPair {
    double alpha;
    double beta;
    PureState psi2;
    PureState psi2_perp;
    PureState psi1;
    PureState psi1_perp;
};
/// Validates alpha^2 + beta^2 = 1 and 0 <= beta <= alpha.
SchmidtPair make_schmidt_pair(double alpha, double beta, const PureState &psi2, const PureState &psi1);

struct SchmidtGap {
    double lhs;
    double rhs;
    bool holds;
};
/// ||xi xi^dag - chi chi^dag||_tr with chi the unnormalized alpha term.
SchmidtGap schmidt_gap(const SchmidtPair &pair);

// ---- no-side-link campaign --------------------------------------------------------

/// Encoder at s0 (2 qubits -> 1), splitter at t0 (1 -> 2), and decoders at t1, t2.
struct NoSideLinkProtocol {
    Channel encoder;
    Channel splitter;
    Channel decoder1;
    Channel decoder2;
};
NoSideLinkProtocol random_no_side_link(Rng &rng);
/// s0 forwards psi1, t0 sends it to t1 and I/2 to t2.
NoSideLinkProtocol forward_first_protocol();
/// Both sources measured in Z, encoded as a two-bit random access code, phase-covariant copy at t0.
NoSideLinkProtocol qra_pc_protocol();

struct NoSideLinkScore {
    FidelitySearchResult t1;
    FidelitySearchResult t2;
    /// Min over psi and classical b of the t2 success, minus 1/2.
    double epsilon_t2;
    double image_distance;
};
NoSideLinkScore score_protocol(const NoSideLinkProtocol &p, const SearchOptions &opt);

struct FalsifierResult {
    uint64_t trials;
    uint64_t seed;
    /// Max over trials of min(F1, F2).
    double max_min_fidelity;
    uint64_t worst_trial;
    /// Trials whose t2 success exceeded 1/2, so the distance check is not vacuous.
    uint64_t distance_checks;
    /// Min over those trials of distance - 4 eps.
    double min_distance_margin;
    uint64_t distance_violations;
};
FalsifierResult theorem1_falsifier(uint64_t trials, uint64_t seed, int jobs = 0);
FalsifierResult theorem1_falsifier_serial(uint64_t trials, uint64_t seed);

}  // namespace qnc

#endif
