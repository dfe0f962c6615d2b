// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace irs {

/// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario text could not be parsed (message carries line/column).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (bad dimensions, inverted box, unknown key).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The geometry makes the model undefined: zero distances, antipodal links, d_min = 0.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Work size exceeds a configured guard (grid searches).
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace irs
