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

#include <stdexcept>
#include <string>

namespace cqa {

/// Failure categories. Each maps to a distinct CLI exit code.
enum class ErrorCode {
    invalid_argument,
    dimension_limit,
    infeasible,
    closure_violation,
    degenerate,
    wrong_sector,
    parse,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

inline void require(bool ok, const std::string &what, ErrorCode code = ErrorCode::invalid_argument) {
    if (!ok) {
        throw Error(code, what);
    }
}

}  // namespace cqa
