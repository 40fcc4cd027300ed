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

// RAII wrappers over the C handles, plus status checking that maps library
// failures onto the CLI exit-code contract.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "opdist/opdist.h"

namespace opdist_cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitBadConfig = 2,
    kExitIo = 3,
};

/// Aborts a command with a specific exit code.
class CommandError : public std::runtime_error {
  public:
    CommandError(int exit_code, const std::string &what)
        : std::runtime_error(what), exit_code_(exit_code) {}
    [[nodiscard]] int exit_code() const noexcept { return exit_code_; }

  private:
    int exit_code_;
};

template <class T, void (*Free)(T *)> struct HandleDeleter {
    void operator()(T *p) const noexcept { Free(p); }
};

using State = std::unique_ptr<opdist_state,
                              HandleDeleter<opdist_state, opdist_state_free>>;
using Mub =
    std::unique_ptr<opdist_mub, HandleDeleter<opdist_mub, opdist_mub_free>>;
using Ordering =
    std::unique_ptr<opdist_ordering,
                    HandleDeleter<opdist_ordering, opdist_ordering_free>>;

inline void check(opdist_status status, const std::string &context) {
    if (status == OPDIST_OK) {
        return;
    }
    const int code = (status == OPDIST_E_UNSUPPORTED_DIMENSION ||
                      status == OPDIST_E_DOMAIN ||
                      status == OPDIST_E_INVALID_ARGUMENT)
                         ? kExitBadConfig
                         : kExitCheckFailed;
    throw CommandError(code, context + ": " +
                                 opdist_status_string(status) + " (" +
                                 opdist_last_error() + ")");
}

} // namespace opdist_cli
