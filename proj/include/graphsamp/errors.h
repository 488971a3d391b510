// Copyright 2026 The graphsamp Authors.
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

#ifndef GRAPHSAMP_ERRORS_H_
#define GRAPHSAMP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsamp {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A computation refused because it would exceed a configured size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Correlation is undefined (e.g. a constant score vector).
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphsamp

#endif  // GRAPHSAMP_ERRORS_H_
