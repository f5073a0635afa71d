// Copyright 2026 The fourcolor Authors
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


#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourcolor/ids.hpp"

namespace fourcolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rotation system, asymmetric adjacency, Euler defect, ...
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (wrong degree, wrong class,
// missing outer face, unknown vertex, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Input could not be parsed or names unknown entities.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A triangulation record does not match the graph it is applied to.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class BoundExceededError : public Error {
 public:
  using Error::Error;
};

class NonPlanarError : public Error {
 public:
  NonPlanarError(std::string what, std::vector<Edge> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}

  /// Edges of a Kuratowski subdivision found in the input.
  const std::vector<Edge>& witness() const { return witness_; }

 private:
  std::vector<Edge> witness_;
};

}  // namespace fourcolor
