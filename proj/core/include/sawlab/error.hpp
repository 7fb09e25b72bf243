#pragma once

#include <stdexcept>
#include <string>

namespace sawlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, unknown family names, violated preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (vertices, search nodes) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed to hold on computed data.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sawlab
