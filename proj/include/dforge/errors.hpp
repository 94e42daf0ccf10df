#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data: bad probabilities, non-finite entries, shape
/// mismatches, unparseable files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A polynomial expected to be real-rooted failed the numeric test.
class RootednessError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or ring computation would exceed the configured work cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace dforge
