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
#include <stdexcept>

#include "qnc/bounds.hpp"

namespace qnc {

double f_eps(double eps, BoundVariant v) {
    if (!(eps >= 0 && eps <= 0.5)) {
        throw std::domain_error("f_eps: eps must lie in [0, 1/2]");
    }
    double radicand = 9.0 / 4 + eps * eps - 5 * eps;
    if (radicand < 0) {
        throw std::domain_error("f_eps: negative radicand");
    }
    double f = 1.5 + eps - std::sqrt(radicand);
    return v == BoundVariant::thm4 ? f : f / 2;
}

double thm4_rhs(double eps, double beta) {
    double b2 = beta * beta;
    double f = f_eps(eps, BoundVariant::thm4);
    return 2 * beta * std::sqrt(1 - b2 / 2) + 2 * std::sqrt(eps - eps * eps) * ((1 - b2) * f + b2);
}

bool thm4_satisfiable(double eps, double beta_step) {
    double lhs = 1 - 2 * eps;
    double beta_max = std::sqrt(std::min(f_eps(eps, BoundVariant::thm4) / 2, 0.5));
    for (double b = 0; b < beta_max; b += beta_step) {
        if (thm4_rhs(eps, b) >= lhs) {
            return true;
        }
    }
    return thm4_rhs(eps, beta_max) >= lhs;
}

namespace {

// Smallest eps in [lo, hi] with pred true; pred is monotone false -> true.
template <class Pred>
double bisect(double lo, double hi, double resolution, Pred pred) {
    while (hi - lo > resolution) {
        double mid = 0.5 * (lo + hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

BoundsSolution solve_thm4(double resolution, double beta_step) {
    double e = bisect(0, 0.5, resolution, [&](double x) { return thm4_satisfiable(x, beta_step); });
    return {e, 1 - e, "bisection", resolution};
}

double thm3_lhs(double eps) {
    return 1 - 4 * std::sqrt(eps) - 6 * eps;
}

double thm3_rhs(double eps) {
    double f = f_eps(eps, BoundVariant::thm3);
    return 2 * std::sqrt(f) + 3 * f;
}

BoundsSolution solve_thm3(double resolution) {
    double e = bisect(0, 0.5, resolution, [](double x) { return thm3_lhs(x) <= thm3_rhs(x); });
    return {e, 1 - e, "bisection", resolution};
}

}  // namespace qnc
