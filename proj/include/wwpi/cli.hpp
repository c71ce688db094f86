// Copyright 2026 The wwpi Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wwpi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitTolerance = 1,
    kExitConfig = 2,
    kExitEngine = 3,
};

/// Runs the tool with args[0] as the program name. WWPI_TOL, if set,
/// overrides the global tolerance for the duration of the call.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wwpi
