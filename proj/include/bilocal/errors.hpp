#pragma once

#include <stdexcept>
#include <string>

namespace bilocal {

/// Base of every error the engine raises on bad input. Mathematical check
/// failures are never exceptions; they are carried in reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Slot, generator or vector outside the (kind, N, M, P) context, or two
/// vectors from different contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A sector label violating its unitarity bound; the message names the
/// violated inequality.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

/// Mode or particle truncation too small for the requested construction.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the field kind (e.g. the charge in the real case).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Label that satisfies its stated invariants but admits no valid preimage.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bilocal
