// Copyright 2026 The ksctx developers
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksctx {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Radicand exceeds the supported factoring bound (10^12).
struct RadicandTooLarge : Error {
  using Error::Error;
};

/// Division request that the radical ring does not support.
struct NotSupported : Error {
  using Error::Error;
};

/// Ray with all components zero.
struct InvalidRay : Error {
  using Error::Error;
};

/// Operands of mismatched ambient dimension.
struct DimError : Error {
  using Error::Error;
};

/// Rays that are not an orthogonal non-proportional pair.
struct NotAPair : Error {
  using Error::Error;
};

/// Two triads sharing two or more rays; impossible for exact input.
struct SharedPairViolation : Error {
  using Error::Error;
};

/// Instance exceeds a brute-force size cap.
struct TooLarge : Error {
  using Error::Error;
};

/// Witness with unassigned rays.
struct PartialAssignment : Error {
  using Error::Error;
};

/// Connection lacks the bijection for a requested context pair.
struct MissingPair : Error {
  using Error::Error;
};

/// Labeling that fails its own invariants.
struct InvalidLabeling : Error {
  using Error::Error;
};

/// A ray received different labels from two triads; signals a bug.
struct InconsistentTransport : Error {
  using Error::Error;
};

/// Connection search run on a set that is not triad-closed.
struct NotClosed : Error {
  using Error::Error;
};

/// Corpus lookup with an unknown name.
struct UnknownCorpus : Error {
  using Error::Error;
};

/// Text input that does not match the expected grammar.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}
  explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace ksctx
