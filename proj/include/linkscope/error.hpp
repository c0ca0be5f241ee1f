// Copyright 2026 The linkscope Authors
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

#ifndef LINKSCOPE_ERROR_HPP_
#define LINKSCOPE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linkscope {

enum class ErrorCode {
  kIo,
  kParse,
  kNotFound,
  kDuplicate,
  kSelfLoop,
  kMissingEndpoint,
  kDisconnected,
  kPrecondition,
  kTooFewMonitors,
  kPathExplosion,
  kInvalidPath,
  kInvalidCycle,
  kInvalidWeight,
  kInconsistent,
  kNotInterior,
  kTooLarge,
  kTooSmall,
  kInfeasibleStage,
  kInconclusive,
  kOutOfRange,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Edge-list parse failure with the offending 1-based line number.
class ParseError : public Error {
 public:
  enum class Reason { kMalformed, kDuplicateEdge, kSelfLoop, kUnknownNode };

  ParseError(Reason reason, std::size_t line, const std::string& detail);

  Reason reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Reason reason_;
  std::size_t line_;
};

}  // namespace linkscope

#endif  // LINKSCOPE_ERROR_HPP_
