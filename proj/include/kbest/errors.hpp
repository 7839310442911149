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

#ifndef KBEST_ERRORS_HPP
#define KBEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kbest {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. line() is 1-based; 0 means "no line context".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DuplicateEdge : public ParseError {
 public:
  using ParseError::ParseError;
};

class SelfLoop : public ParseError {
 public:
  using ParseError::ParseError;
};

class VertexOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Exact fixed-point arithmetic left the representable range.
class WeightOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Lookup of an edge absent from the instance.
class UnknownEdge : public Error {
 public:
  using Error::Error;
};

/// An exchange pair violates its preconditions or its application is not a
/// member of the solution family.
class InvalidExchange : public Error {
 public:
  using Error::Error;
};

/// decompose_difference found no distance-reducing exchange; the offending
/// pair of solutions is a counterexample worth archiving.
class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a solver or oracle size limit.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Operation requires a complete graph.
class IncompleteInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace kbest

#endif  // KBEST_ERRORS_HPP
