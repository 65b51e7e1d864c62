#pragma once

#include <stdexcept>
#include <string>

namespace sdbetti {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, non-pure complexes where purity is
/// required, parameters outside a documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size gate (face count, vertex count, enumeration budget) was exceeded.
class GateExceeded : public Error {
 public:
  using Error::Error;
};

/// A computation reached a state the mathematics says is impossible
/// (e.g. a non-diagonalizable transfer matrix).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdbetti
