#pragma once

#include <stdexcept>
#include <string>

namespace hplus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition (bad spec string, shape mismatch,
/// element from another group, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or matrix size cap would be exceeded.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

/// An invariant that should hold by construction did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hplus
