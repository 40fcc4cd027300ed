// Copyright 2026 The opdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace opdist {

enum class ErrorCode {
    Shape,                ///< operand dimensions do not agree
    Domain,               ///< argument outside the operation's domain
    Convergence,          ///< iterative method hit its iteration cap
    NotHermitian,         ///< state validation: A - A^dagger too large
    BadTrace,             ///< state validation: trace differs from one
    NotPsd,               ///< negative eigenvalue beyond tolerance
    UnsupportedDimension, ///< no complete MUB construction for this d
};

const char *to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the C interface can translate it without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
    throw Error(code, what);
}

} // namespace opdist
