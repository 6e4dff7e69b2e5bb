// Copyright (c) the pseudocolor authors
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

#ifndef PCOLOR_CLI_HPP_
#define PCOLOR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "pseudocolor/error.hpp"

namespace pcolor {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParams = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDegenerate = 4;

int exit_code_for(pseudocolor::ErrorCode code);

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pcolor

#endif  // PCOLOR_CLI_HPP_
