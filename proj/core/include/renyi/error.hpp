#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values that must live on the same carrier do not.
struct CarrierMismatchError : Error {
  using Error::Error;
};

/// An operation was called outside its precondition (null condition,
/// non-positive scale, off-support fiber, domination failure, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// A model or family file failed to parse or validate.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what), line(0) {}
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}

  int line;  // 0 when no location is known
};

/// A conditional family admits no generating measure.
struct NotRepresentableError : Error {
  using Error::Error;
};

}  // namespace renyi
