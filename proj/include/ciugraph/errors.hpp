// Copyright 2026 ciugraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIUGRAPH_ERRORS_HPP_
#define CIUGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ciugraph {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-side failures (unreadable or structurally wrong user data).
class MalformedChat : public Error {
 public:
  explicit MalformedChat(const std::string& msg) : Error(msg) {}
};

// Configuration-side failures (lexicon, coordinates, rule tables, specs).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

class UnknownCiuId : public SchemaError {
 public:
  explicit UnknownCiuId(const std::string& msg) : SchemaError(msg) {}
};

class ConflictingEntry : public SchemaError {
 public:
  explicit ConflictingEntry(const std::string& msg) : SchemaError(msg) {}
};

class SpecError : public SchemaError {
 public:
  explicit SpecError(const std::string& msg) : SchemaError(msg) {}
};

class OutOfBounds : public Error {
 public:
  explicit OutOfBounds(const std::string& msg) : Error(msg) {}
};

class MissingCoordinate : public Error {
 public:
  explicit MissingCoordinate(const std::string& msg) : Error(msg) {}
};

// Statistics failures.
class RankDeficient : public Error {
 public:
  explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

class TooFewRows : public Error {
 public:
  explicit TooFewRows(const std::string& msg) : Error(msg) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace ciugraph

#endif  // CIUGRAPH_ERRORS_HPP_
