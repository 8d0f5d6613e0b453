// Copyright 2026 The qrotor Authors
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

namespace qrotor {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  ok = 0,
  invalid_input = 2,
  convergence_failure = 3,
  invariant_violation = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed, out-of-range or dimensionally inconsistent arguments.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string &what)
      : Error(ErrorCode::invalid_input, what) {}
};

/// A checked numerical invariant (unitarity, oracle agreement, ...) failed.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string &what)
      : Error(ErrorCode::invariant_violation, what) {}
};

}  // namespace qrotor
