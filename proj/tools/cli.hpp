// Copyright 2026 The overdurfee Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OVERDURFEE_TOOLS_CLI_HPP_
#define OVERDURFEE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace overdurfee::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`
// unless --out names a file; diagnostics and timings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overdurfee::tools

#endif  // OVERDURFEE_TOOLS_CLI_HPP_
