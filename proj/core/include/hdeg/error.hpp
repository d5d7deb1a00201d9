#pragma once

#include <stdexcept>
#include <string>

namespace hdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied data that violates a precondition (mismatched rings,
/// inhomogeneous generators, out-of-range indices, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded the configured degree or sample cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed, or a
/// proven inequality was violated.  Always indicates a bug in the engine.
class EngineError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdeg
