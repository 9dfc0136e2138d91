/*
   Copyright 2026 The ncred Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NCRED_CLI_COMMANDS_HPP
#define NCRED_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ncred::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// 0: success / every prime reduces well; 1: defect or bad prime found;
/// 2: usage, input or limit error.
enum ExitCode : int { kExitOk = 0, kExitDefect = 1, kExitUsage = 2 };

/// Default envelope, lifted by --unsafe-limits.
inline constexpr std::size_t kMaxGenerators = 4;
inline constexpr int kMaxDegree = 10;

/// Runs the tool on argv[1..]. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncred::cli

#endif  // NCRED_CLI_COMMANDS_HPP
