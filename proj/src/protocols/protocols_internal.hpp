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

#ifndef QNC_PROTOCOLS_INTERNAL_HPP
#define QNC_PROTOCOLS_INTERNAL_HPP

#include "qnc/channels.hpp"

namespace qnc::internal {

/// Marginal 0 or 1 of the universal cloner.
const Channel &uc_marginal(size_t which);
/// (data, classical key) -> X^key data.
const Channel &cx_from_key();
const Channel &gr_mm2();
const Channel &ag_mm3();
/// Decoding basis for a 1-based adversary index: Z, X, Y.
Basis decode_basis(unsigned index);
/// Bit `index` (1-based, most significant first) of a width-bit word.
unsigned bit_of(unsigned x, unsigned width, unsigned index);
/// P(u xor v == target) when both qubits of rho2 are measured in `basis`.
double xor_success(const Mat &rho2, Basis basis, unsigned target);

}  // namespace qnc::internal

#endif
