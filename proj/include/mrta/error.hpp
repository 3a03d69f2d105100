// Copyright 2026 The Authors.
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

#ifndef MRTA_ERROR_HPP_
#define MRTA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mrta {

enum class ErrorCode {
  kInvalidAssignment,
  kUnknownTask,
  kIllegalElement,
  kInstanceTooLarge,
  kDisconnectedGraph,
  kParse,
  kIo,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// Structured error carried by every throwing operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mrta

#endif  // MRTA_ERROR_HPP_
