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

#include "linkscope/error.hpp"

namespace linkscope {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kDuplicate: return "Duplicate";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kMissingEndpoint: return "MissingEndpoint";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kTooFewMonitors: return "TooFewMonitors";
    case ErrorCode::kPathExplosion: return "PathExplosion";
    case ErrorCode::kInvalidPath: return "InvalidPath";
    case ErrorCode::kInvalidCycle: return "InvalidCycle";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kInconsistent: return "InconsistentMeasurements";
    case ErrorCode::kNotInterior: return "NotInterior";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kInfeasibleStage: return "InfeasibleStage";
    case ErrorCode::kInconclusive: return "Inconclusive";
    case ErrorCode::kOutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

namespace {

std::string describe(ParseError::Reason reason, std::size_t line, const std::string& detail) {
  std::string what;
  switch (reason) {
    case ParseError::Reason::kMalformed: what = "malformed input"; break;
    case ParseError::Reason::kDuplicateEdge: what = "duplicate edge"; break;
    case ParseError::Reason::kSelfLoop: what = "self-loop"; break;
    case ParseError::Reason::kUnknownNode: what = "edge endpoint not declared in header"; break;
  }
  what += " at line " + std::to_string(line);
  if (!detail.empty()) what += ": " + detail;
  return what;
}

}  // namespace

ParseError::ParseError(Reason reason, std::size_t line, const std::string& detail)
    : Error(ErrorCode::kParse, describe(reason, line, detail)), reason_(reason), line_(line) {}

}  // namespace linkscope
