// Copyright 2026 The monosub Authors
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


#ifndef MONOSUB_TOOLS_CLI_HPP_
#define MONOSUB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace monosub::cli {

// Stable exit status contract.
enum ExitCode : int {
  kOk = 0,
  kInput = 2,
  kShortfall = 3,
  kSampling = 4,
  kCounterexample = 5,
  kGuaranteeBreach = 6,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace monosub::cli

#endif  // MONOSUB_TOOLS_CLI_HPP_
