// Copyright 2026 The fuia-lab Authors
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

#ifndef FUIA_ERROR_HPP
#define FUIA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fuia {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible tensor/parameter shapes or layer maps.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error("shape error: " + msg) {}
};

/// Invalid configuration values or malformed config files.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

/// File-format and filesystem problems (bad headers, checksums, truncation).
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

/// Non-finite values or numerically undefined operations.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error("numeric error: " + msg) {}
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg)
      : Error("precondition violated: " + msg) {}
};

}  // namespace fuia

#endif  // FUIA_ERROR_HPP
