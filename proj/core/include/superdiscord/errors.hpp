// Copyright 2026 The superdiscord Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace superdiscord {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input matrix or parameter has the wrong shape (or dim_b != 2).
class BadDimension : public Error {
 public:
  using Error::Error;
};

/// Violation of a density-matrix invariant. magnitude() is the offending
/// deviation (max Hermitian defect, |Tr - 1|, or the negative eigenvalue).
class InvalidState : public Error {
 public:
  InvalidState(const std::string& what, double magnitude)
      : Error(what), magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class NotHermitian : public InvalidState {
 public:
  using InvalidState::InvalidState;
};

class TraceNotOne : public InvalidState {
 public:
  using InvalidState::InvalidState;
};

class NotPositive : public InvalidState {
 public:
  using InvalidState::InvalidState;
};

class NegativeStrength : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain of a closed-form expression or family.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BadRank : public Error {
 public:
  using Error::Error;
};

/// Local refinement stopped at max_refine_iters before the value settled.
/// best_value() is the lowest objective value seen.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_value)
      : Error(what), best_value_(best_value) {}
  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

}  // namespace superdiscord
