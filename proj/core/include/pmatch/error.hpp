// Copyright 2026 The pmatch Authors
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

#ifndef PMATCH_ERROR_HPP_
#define PMATCH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmatch {

enum class ErrorKind {
  kParse,            // malformed graph / matching text
  kInvalidArgument,  // precondition violated by the caller
  kOutOfRange,       // vertex or edge index outside the host graph
  kBudgetExceeded,   // search node limit hit
  kTooLarge,         // exhaustive universe beyond the hard cap
  kNotApplicable,    // graph outside the operation's class (e.g. not a forest)
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pmatch

#endif  // PMATCH_ERROR_HPP_
