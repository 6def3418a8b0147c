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

#ifndef TUTTE_ERRORS_HPP
#define TUTTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tutte {

// Bad input: violated preconditions, malformed arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run on a graph above its edge cap.
class CapExceeded : public InputError {
 public:
  CapExceeded(const std::string& what, int cap)
      : InputError(what + " (cap: " + std::to_string(cap) + " edges)"), cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A structural theorem failed to hold; always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tutte

#endif  // TUTTE_ERRORS_HPP
