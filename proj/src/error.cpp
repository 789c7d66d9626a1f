// Copyright 2026 The kpkit Authors.
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

#include "kpkit/error.hpp"

namespace kpkit {
namespace {

std::string Decorate(const std::string& message,
                     std::optional<std::size_t> line) {
  if (!line) return message;
  return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kEmptyNodeId: return "EmptyNodeId";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kDegenerateResidual: return "DegenerateResidual";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyParticipants: return "EmptyParticipants";
    case ErrorCode::kSelfInteraction: return "SelfInteraction";
    case ErrorCode::kUnknownKind: return "UnknownKind";
    case ErrorCode::kUnknownRole: return "UnknownRole";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(Decorate(message, line)), code_(code), line_(line) {}

}  // namespace kpkit
