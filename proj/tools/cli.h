// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOARR_TOOLS_CLI_H_
#define TWOARR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace twoarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitDistinguished = 10;

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`; returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoarr::cli

#endif  // TWOARR_TOOLS_CLI_H_
