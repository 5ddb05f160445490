#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad encodings, invalid maps, duplicate
/// edges, invalid swap plans.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request that violates an operation's precondition or a size
/// guard (disconnected graph for a distance matrix, isolated vertex for the
/// normalized Laplacian, search space too large).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cospec
