// Copyright 2026 The logicint Authors
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

namespace logicint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to an operation (out-of-range site, mismatched dims, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition was not met by otherwise well-formed input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A requested object would exceed a configured size limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// The bond operator has no representation in the permutation group algebra.
class UnsupportedDecomposition : public Error {
 public:
  using Error::Error;
};

/// Loop counting was asked for a configuration outside the 1-D chain setting.
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

}  // namespace logicint
