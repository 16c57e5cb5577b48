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

#ifndef QNC_RANDOM_HPP
#define QNC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qnc/channels.hpp"

namespace qnc {

/// SplitMix64 finalizer; used to derive per-stream seeds.
uint64_t splitmix64(uint64_t x);

/// mt19937_64 with every conversion to real numbers done by hand, so the
/// stream is identical on every standard library.
class Rng {
   public:
    explicit Rng(uint64_t seed, uint64_t stream = 0);

    uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Box-Muller, no caching.
    double normal();
    cplx complex_normal();

   private:
    std::mt19937_64 engine_;
};

PureState random_pure_state(Rng &rng, size_t nqubits = 1);
DensityOp random_density(Rng &rng, size_t nqubits);
Mat random_hermitian(Rng &rng, size_t dim);
/// Ginibre matrix -> positive Choi matrix -> trace-preserving by whitening the input marginal.
Channel random_channel(Rng &rng, size_t dim_in, size_t dim_out);

}  // namespace qnc

#endif
