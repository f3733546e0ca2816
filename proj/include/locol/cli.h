// Copyright 2026 The locol Authors
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

#ifndef LOCOL_CLI_H_
#define LOCOL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace locol::cli {

enum ExitCode : int {
  kOk = 0,
  // A coloring or certificate failed verification, a sweep found a
  // failure, or the solver exhausted --max-k.
  kInvalid = 1,
  kUsage = 2,
  kInconclusive = 3,
  kInternal = 70,
};

// Runs one subcommand. `args` excludes the program name. `in` backs
// "--file -".
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace locol::cli

#endif  // LOCOL_CLI_H_
