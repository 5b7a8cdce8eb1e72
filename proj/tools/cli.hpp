// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The plt command-line tool as a library, so tests can drive it in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plt::cli {

// Parses args (args[0] is the program name) and runs one subcommand.
// Returns the process exit code: 0 on success, 1 on a failed verification
// or runtime error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plt::cli
