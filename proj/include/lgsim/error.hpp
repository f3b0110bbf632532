// Copyright 2026 The lgsim Authors
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

#ifndef LGSIM_ERROR_HPP
#define LGSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lgsim {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotHermitian,
    InvariantViolation,
    UnknownLabel,
    DuplicateLabel,
    Parse,
    Io,
};

const char *to_string(ErrorCode code);

/// Every failure raised by the core library. The C API maps `code()` onto
/// its status enum.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace lgsim

#endif
