// Copyright 2026 The deltastab Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "deltastab/statevec.hpp"

namespace deltastab::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kResourceCap = 3,
    kNotInVDelta = 4,
    kConsistency = 5,
    kIoFailure = 6,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Integers print exactly, everything else with 12 significant digits.
std::string format_amplitude(Amplitude a);

}  // namespace deltastab::cli
