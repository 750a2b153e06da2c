#pragma once

#include <stdexcept>
#include <string>

namespace tncb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; `line` is 1-based (0 when unknown).
struct ParseError : Error {
  ParseError(int line_, const std::string& msg)
      : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
  int line = 0;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct LimitError : Error {
  using Error::Error;
};

struct UnsupportedError : Error {
  using Error::Error;
};

/// Lexical transfer failed: uncovered or ambiguously covered source sign.
struct TransferError : Error {
  using Error::Error;
};

/// Two rule applications produced distinct mothers for the same sign pair.
struct PrecedenceViolationError : Error {
  using Error::Error;
};

/// The generator exceeded its rewrite bound or a move failed to improve
/// the tree; the grammar breaks the assumptions the loop relies on.
struct MonotonicityViolationError : Error {
  using Error::Error;
};

}  // namespace tncb
