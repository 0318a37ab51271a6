// Copyright 2026 The cqa Authors
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

namespace cqa::cli {

/// Process exit statuses. Library error categories map one-to-one.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kParse = 3,
    kDimensionLimit = 4,
    kInfeasible = 5,
    kClosureViolation = 6,
    kDegenerate = 7,
    kWrongSector = 8,
    kInternal = 9,
};

/// Runs one command. args excludes the program name. Artifacts go to the
/// --out file when given, otherwise to `out`; failures write a JSON error
/// object to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cqa::cli
