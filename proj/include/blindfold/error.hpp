// Copyright 2026 The Blindfold Authors. All rights reserved.
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

#ifndef BLINDFOLD_ERROR_HPP_
#define BLINDFOLD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace blindfold {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an argument was violated (mismatched sizes, bad modulus,
// element not in the group, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// A configured resource cap (group order, state count, memory) was exceeded.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Something that the underlying mathematics says cannot happen did happen.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace blindfold

#endif  // BLINDFOLD_ERROR_HPP_
