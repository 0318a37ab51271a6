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

#include "cqa/errors.hpp"

namespace cqa {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument:
            return "invalid_argument";
        case ErrorCode::dimension_limit:
            return "dimension_limit";
        case ErrorCode::infeasible:
            return "infeasible";
        case ErrorCode::closure_violation:
            return "closure_violation";
        case ErrorCode::degenerate:
            return "degenerate";
        case ErrorCode::wrong_sector:
            return "wrong_sector";
        case ErrorCode::parse:
            return "parse_error";
    }
    return "unknown";
}

}  // namespace cqa
