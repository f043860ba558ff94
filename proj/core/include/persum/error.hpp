// Copyright 2026 The persum Authors.
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

#ifndef PERSUM_ERROR_HPP
#define PERSUM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace persum {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the documented range (q < 2, p >= q, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A function was evaluated at a pole or outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sequence family lacks the extension needed for a requested residue.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes that must agree did not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Errors raised while reading an expression carry the byte offset of the
/// offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class LexError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// Unknown function or identifier in an otherwise well-formed expression.
class SemanticError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class NotPeriodicError : public Error {
 public:
  using Error::Error;
};

}  // namespace persum

#endif  // PERSUM_ERROR_HPP
