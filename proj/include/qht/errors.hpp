// Copyright 2026 The qhtest Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes or lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be Hermitian is not, within tolerance.
class NotHermitianError : public Error {
 public:
  explicit NotHermitianError(double asymmetry)
      : Error("matrix is not Hermitian: max |H - H^dagger| = " +
              std::to_string(asymmetry)),
        asymmetry_(asymmetry) {}

  double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

/// A scalar function was applied outside its domain (e.g. sqrt of a
/// significantly negative eigenvalue).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double eigenvalue)
      : Error(what + " (eigenvalue " + std::to_string(eigenvalue) + ")"),
        eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// A configured size cap (tensor dimension, term count) would be exceeded.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::uint64_t required,
                   std::uint64_t allowed)
      : Error(what + ": requires " + std::to_string(required) +
              ", cap is " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

/// A density matrix, pure state, POVM or probability vector violates one of
/// its invariants. The message names the violated invariant.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Input is degenerate for the requested operation (zero normalizer,
/// no sign change to bracket, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. Carries a 1-based line/column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(line ? "line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what
                   : what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qht
