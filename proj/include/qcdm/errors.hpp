// Copyright 2026 The qcdm Authors
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

namespace qcdm {

/// Base class for every error raised by the library. Errors derived from
/// DomainError describe inputs that are well-formed but violate a
/// mathematical precondition; ParseError is reserved for malformed text.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotHermitian : public DomainError {
 public:
  NotHermitian(const std::string& what, double residual)
      : DomainError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, int sweeps)
      : Error(what), sweeps_(sweeps) {}
  int sweeps() const noexcept { return sweeps_; }

 private:
  int sweeps_;
};

class InvalidSelector : public DomainError {
 public:
  using DomainError::DomainError;
};

class IncompleteFamily : public DomainError {
 public:
  IncompleteFamily(const std::string& what, double residual)
      : DomainError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Selection whose probability falls below the conditioning threshold.
class ZeroProbability : public DomainError {
 public:
  ZeroProbability(const std::string& what, double probability)
      : DomainError(what), probability_(probability) {}
  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

/// A computed quantity left its admissible range by more than the tolerance.
class NumericalError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qcdm
