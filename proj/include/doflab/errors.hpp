// Copyright 2026 The doflab Authors.
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

#ifndef DOFLAB_ERRORS_HPP
#define DOFLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doflab {

// Base for every failure raised by the library. Bad arguments (dimension
// mismatches, malformed configs) use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedRegionError : public Error {
 public:
  UnboundedRegionError() : Error("region is unbounded") {}
};

class EmptyRegionError : public Error {
 public:
  EmptyRegionError() : Error("region is empty") {}
};

class UnsupportedDimensionError : public Error {
 public:
  explicit UnsupportedDimensionError(std::size_t dim)
      : Error("unsupported dimension " + std::to_string(dim)), dimension(dim) {}
  std::size_t dimension;
};

// Raised when a region constructor is asked for parameters it does not cover.
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

// A decoding matrix (or noise covariance) was numerically rank-deficient.
// `slot` is 1-based; `user` is 1-based (0 when the failure is not per-user).
class SingularChannelError : public Error {
 public:
  SingularChannelError(std::size_t slot_, std::size_t user_, double cond_)
      : Error("singular channel at slot " + std::to_string(slot_) + " (user " +
              std::to_string(user_) + ", condition " + std::to_string(cond_) +
              ")"),
        slot(slot_),
        user(user_),
        condition(cond_) {}
  std::size_t slot;
  std::size_t user;
  double condition;
};

}  // namespace doflab

#endif  // DOFLAB_ERRORS_HPP
