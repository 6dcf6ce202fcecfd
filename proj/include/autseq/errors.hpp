#pragma once

#include <stdexcept>
#include <string>

namespace autseq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad file, bad argument, violated
/// precondition the caller can fix).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an automaton file.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A construction exceeded its configured state cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Oracle-driven automaton synthesis failed to converge or validate.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// A brute-force scan could not certify its answer on the given prefix.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside a construction failed. Always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace autseq
