// Copyright 2026 The kpkit Authors.
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

#ifndef KPKIT_CLI_HPP_
#define KPKIT_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kpkit {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitConfig = 3,
  kExitUnknownNode = 4,
};

// Runs `kpkit <args...>`; args exclude the program name. Standard output
// carries human-readable summaries only; artifacts go under --out-dir.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpkit

#endif  // KPKIT_CLI_HPP_
