// Copyright 2026 The tdesim Authors
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

#ifndef TDESIM_ERROR_HPP
#define TDESIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tdesim {

enum class ErrorKind {
  InvalidArgument,    // bad input: dimensions, labels, ranges, normalization
  InvalidState,       // a value violates its type invariant
  NoFixedPoint,       // consistency problem has no admissible solution
  NonUniqueSolution,  // perturbed problem still degenerate
  NotConverged,       // iteration cap reached
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tdesim

#endif  // TDESIM_ERROR_HPP
