// Copyright 2026 The rdfpt Authors.
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

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>

namespace rdfpt {

// Base of every error raised by the library. Callers that only need to
// report a failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed N-Triples, SPARQL or SQL text. `offset` is the byte position
// inside the offending input (line-relative for N-Triples).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }
  // The description without the offset suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Input that is well formed but uses a construct outside the supported
// subset (blank nodes, ASK, variable predicates, ...).
class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(const std::string& construct)
      : Error("unsupported feature: " + construct), construct_(construct) {}

  const std::string& construct() const { return construct_; }

 private:
  std::string construct_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PlanningError : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A map or reduce function threw. `split` names the failing input split
// (or reducer index for reduce failures); `cause` is the original error.
class JobFailure : public Error {
 public:
  JobFailure(const std::string& what, int split, std::exception_ptr cause)
      : Error(what), split_(split), cause_(std::move(cause)) {}

  int split() const { return split_; }
  const std::exception_ptr& cause() const { return cause_; }

 private:
  int split_;
  std::exception_ptr cause_;
};

}  // namespace rdfpt
