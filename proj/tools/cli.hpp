// Copyright 2026 The bosonic-mac Authors
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

#ifndef BOSONIC_MAC_TOOLS_CLI_HPP
#define BOSONIC_MAC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bmac::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kIo = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmac::cli

#endif  // BOSONIC_MAC_TOOLS_CLI_HPP
