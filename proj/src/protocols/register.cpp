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

#include "qnc/protocols.hpp"

namespace qnc {

void RegisterMap::add(const Mat &rho, std::vector<std::string> names) {
    if ((size_t{1} << names.size()) != rho.rows()) {
        throw UsageError("RegisterMap::add: name count does not match the operator");
    }
    for (const auto &n : names) {
        if (std::find(names_.begin(), names_.end(), n) != names_.end()) {
            throw UsageError("RegisterMap::add: register " + n + " already live");
        }
    }
    if (names_.size() + names.size() > 5) {
        throw UsageError("RegisterMap: more than five live qubits");
    }
    op_ = names_.empty() ? rho : kron(op_, rho);
    names_.insert(names_.end(), names.begin(), names.end());
}

size_t RegisterMap::slot(const std::string &name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw UsageError("RegisterMap: no live register " + name);
    }
    return static_cast<size_t>(it - names_.begin());
}

std::vector<size_t> RegisterMap::slots(const std::vector<std::string> &names) const {
    std::vector<size_t> s;
    for (const auto &n : names) {
        s.push_back(slot(n));
    }
    return s;
}

void RegisterMap::apply(const Channel &c, const std::vector<std::string> &in, std::vector<std::string> out) {
    if ((size_t{1} << out.size()) != c.dim_out()) {
        throw UsageError("RegisterMap::apply: output names do not match the channel");
    }
    std::vector<size_t> targets = slots(in);
    std::vector<std::string> rest;
    for (size_t k = 0; k < names_.size(); k++) {
        if (std::find(targets.begin(), targets.end(), k) == targets.end()) {
            rest.push_back(names_[k]);
        }
    }
    for (const auto &n : out) {
        if (std::find(rest.begin(), rest.end(), n) != rest.end()) {
            throw UsageError("RegisterMap::apply: output " + n + " collides with a live register");
        }
    }
    if (out.size() + rest.size() > 5) {
        throw UsageError("RegisterMap: more than five live qubits");
    }
    op_ = apply_on_qubits(c, op_, targets);
    out.insert(out.end(), rest.begin(), rest.end());
    names_ = std::move(out);
}

void RegisterMap::discard(const std::vector<std::string> &names) {
    std::vector<size_t> drop = slots(names);
    std::vector<size_t> keep;
    std::vector<std::string> kept_names;
    for (size_t k = 0; k < names_.size(); k++) {
        if (std::find(drop.begin(), drop.end(), k) == drop.end()) {
            keep.push_back(k);
            kept_names.push_back(names_[k]);
        }
    }
    if (keep.empty()) {
        throw UsageError("RegisterMap::discard: cannot discard every register");
    }
    op_ = partial_trace(op_, keep);
    names_ = std::move(kept_names);
}

Mat RegisterMap::marginal(const std::vector<std::string> &names) const {
    return partial_trace(op_, slots(names));
}

}  // namespace qnc
