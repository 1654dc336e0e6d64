#pragma once

#include <stdexcept>
#include <string>

namespace uxc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed documents, violated preconditions, degenerate data.
// Maps to exit code / status 2.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Scalars from different field backends were mixed in one computation.
class BackendMismatchError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// line_through / meet called on an equal pair.
class DegeneratePairError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A fat-point support coincides with a point of the base configuration.
class OverlapError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// The requested backend cannot represent the construction (missing roots of unity).
class FieldError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Randomized computation failed to reach agreement across samples/primes.
// Maps to exit code / status 3.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// Addition-deletion step: the restriction count matches neither a+1 nor b+1.
class AdditionInapplicableError : public Error {
 public:
  AdditionInapplicableError(const std::string& what, unsigned count)
      : Error(what), restriction_count(count) {}
  unsigned restriction_count;
};

// Kernel-extraction request where the solution space is not one-dimensional.
class NotUniqueError : public Error {
 public:
  NotUniqueError(const std::string& what, unsigned dim) : Error(what), dimension(dim) {}
  unsigned dimension;
};

// Arrangement cannot be drawn (no real embedding and no drawing hints).
class RenderError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

}  // namespace uxc
