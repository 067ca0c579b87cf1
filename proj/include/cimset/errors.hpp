#pragma once

#include <stdexcept>
#include <string>

namespace cimset {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that violate an operation's preconditions: bad dimensions, ordering
// mismatches, graphs outside a family, malformed vectors.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A 0/1 vector that does not satisfy the product formula of its block.
class NotAVertexError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A vertex paired with itself where an edge is expected.
class DegeneratePairError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration or memory bounds exceeded. The message carries the computed size.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Requests outside what the closed-form geometry covers (parent caps).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV or JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace cimset
