// Copyright 2026 The advcal Authors
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

#ifndef ADVCAL_ERRORS_HPP_
#define ADVCAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace advcal {

// Base class for all library errors. Subclasses distinguish caller mistakes
// (bad priors, bad arguments) from structural failures (empty windows,
// out-of-domain special-function arguments).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A prior description violates its invariants (non-positive scale, masses
// that do not sum to one, ...).
class InvalidPriorError : public Error {
 public:
  explicit InvalidPriorError(const std::string& what) : Error(what) {}
};

// A plain argument precondition failed.
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

// The indistinguishability window carries no probability mass beyond the
// guess set (q <= p), so the posterior ratio is undefined.
class EmptyWindowError : public Error {
 public:
  explicit EmptyWindowError(const std::string& what) : Error(what) {}
};

// Argument outside the domain of a special function (e.g. Lambert W below
// -1/e).
class OutOfDomainError : public Error {
 public:
  explicit OutOfDomainError(const std::string& what) : Error(what) {}
};

// The windowed worst-prior expression has no stationary point for the given
// (delta, q); callers fall back to the full-window worst case.
class NoStationaryPointError : public Error {
 public:
  explicit NoStationaryPointError(const std::string& what) : Error(what) {}
};

// Every conditional density vanished at the observed output.
class UndefinedOutputError : public Error {
 public:
  explicit UndefinedOutputError(const std::string& what) : Error(what) {}
};

// Operation not defined for this prior kind (e.g. CDF window of a
// worst-case prior).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace advcal

#endif  // ADVCAL_ERRORS_HPP_
