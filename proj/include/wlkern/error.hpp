// Copyright 2026 The wlkern Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wlkern {

enum class ErrorCode {
  OutOfRangeVertex,
  SelfLoop,
  ConflictingEdgeLabel,
  MemoryBudgetExceeded,
  SizeLimitExceeded,
  NodeBudgetExceeded,
  MissingFile,
  MalformedLine,
  EdgeAcrossGraphs,
  IndicatorNotContiguous,
  Overflow,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` gives
/// the machine-checkable category, `what()` the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ConflictingEdgeLabel: return "ConflictingEdgeLabel";
    case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EdgeAcrossGraphs: return "EdgeAcrossGraphs";
    case ErrorCode::IndicatorNotContiguous: return "IndicatorNotContiguous";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace wlkern
