#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace staghunt {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input: dimension mismatches, out-of-range indices,
// unreadable files. CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// A value object failed its invariants (e.g. a probability vector that
// does not sum to 1). CLI exit code 1.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// Document text could not be parsed; the message carries field context.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// The Stag Hunt ordering a > b >= d > c (or the 2x2 symmetric shape)
// was violated. CLI exit code 2.
class StagHuntStructureError : public Error {
 public:
  StagHuntStructureError(std::string violated, const std::string& detail)
      : Error(detail), violated_(std::move(violated)) {}

  // The comparison that failed, e.g. "a > b".
  const std::string& violated_constraint() const { return violated_; }

 private:
  std::string violated_;
};

// Input exceeds a hard algorithmic size limit. CLI exit code 3.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace staghunt
