#pragma once

#include <stdexcept>
#include <string>

namespace typeb {

// Base class for every error raised by the library.  The CLI maps any
// TypebError to exit code 1; anything else escaping is a bug.
class TypebError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (crossing partition,
// non-comparable interval, zero first component where invertibility is
// required by context, ...).
class DomainError : public TypebError {
 public:
  using TypebError::TypebError;
};

// Sizes/orders of two arguments disagree.
class DimensionError : public TypebError {
 public:
  using TypebError::TypebError;
};

// Requested size exceeds a configured cap.
class SizeLimitError : public TypebError {
 public:
  using TypebError::TypebError;
};

// Element has no multiplicative inverse.
class NotInvertibleError : public TypebError {
 public:
  using TypebError::TypebError;
};

// A coefficient beyond the common truncation order would be needed.
class TruncationError : public TypebError {
 public:
  using TypebError::TypebError;
};

// The result exists but is not representable exactly over the rationals.
class ExactnessError : public TypebError {
 public:
  using TypebError::TypebError;
};

// Malformed textual input (rational, partition, series, JSON payload).
class ParseError : public TypebError {
 public:
  using TypebError::TypebError;
};

}  // namespace typeb
