// Copyright 2026 The gaussx Authors
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

namespace gaussx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, asymmetric matrices, out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Matrix is singular (or numerically so) where an inverse or a canonical factor is needed.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The commutator defect of a channel is degenerate, so no environment state exists
/// within the nondegenerate framework and extremality cannot be decided.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// Noise covariance violates the complete-positivity inequality.
class NotCompletelyPositive : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed one of the identities it is required to satisfy.
class ResidualFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussx
