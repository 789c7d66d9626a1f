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

#ifndef KPKIT_ERROR_HPP_
#define KPKIT_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kpkit {

enum class ErrorCode {
  kUnknownEndpoint,
  kSelfLoop,
  kEmptyNodeId,
  kDegenerateGraph,
  kUnknownNode,
  kDegenerateResidual,
  kEmptySet,
  kInvalidConfig,
  kTooLarge,
  kParseError,
  kEmptyParticipants,
  kSelfInteraction,
  kUnknownKind,
  kUnknownRole,
  kDuplicateNode,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. Parse-family errors carry
// the 1-based line number of the offending record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace kpkit

#endif  // KPKIT_ERROR_HPP_
