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

#ifndef QNC_CLI_HPP
#define QNC_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qnc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr const char *kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Full command line without the program name. env_seed stands in for QNC_SEED.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const std::optional<std::string> &env_seed);

/// %.12g
std::string format_value(double v);

}  // namespace qnc::cli

#endif
