#pragma once

#include <stdexcept>
#include <string>

namespace udpkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// The ring does not support the requested operation (see Capability).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// decompose_in_sum was asked for an element outside the sum ideal.
class NoDecompositionError : public Error {
 public:
  using Error::Error;
};

/// A constructor's algebraic precondition does not hold for the given ideals.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph shape is wrong for the operation (e.g. a tree handed to a
/// counterexample constructor).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The ring has no non-distributive ideal triple, so no failing labeling can
/// be built from it.
class ObstructionError : public Error {
 public:
  using Error::Error;
};

/// Invalid graph (disconnected, loop, dangling endpoint, duplicate id, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or graph file. `line()` is 0 when not tied to a file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The brute-force search space exceeds the configured cap.
class SearchSpaceError : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

}  // namespace udpkit
