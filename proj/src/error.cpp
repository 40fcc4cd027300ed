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

#include "opdist/error.hpp"

namespace opdist {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Shape:
        return "shape error";
    case ErrorCode::Domain:
        return "domain error";
    case ErrorCode::Convergence:
        return "convergence error";
    case ErrorCode::NotHermitian:
        return "not Hermitian";
    case ErrorCode::BadTrace:
        return "trace is not one";
    case ErrorCode::NotPsd:
        return "not positive semidefinite";
    case ErrorCode::UnsupportedDimension:
        return "unsupported dimension";
    }
    return "unknown error";
}

} // namespace opdist
