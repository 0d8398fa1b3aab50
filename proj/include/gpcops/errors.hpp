#pragma once

#include <stdexcept>
#include <string>

namespace gpcops {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph parameters or solver arguments out of range.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a graph from the n = 7k/i family.
class FamilyError : public Error {
 public:
  using Error::Error;
};

/// Move requested for the side that is not on turn.
class TurnError : public Error {
 public:
  using Error::Error;
};

/// The robber strategy met a state it claims cannot exist.
class StrategyError : public Error {
 public:
  using Error::Error;
};

class TrappedError : public Error {
 public:
  using Error::Error;
};

/// State space too large for the configured memory budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Even the maximum number of cops tried loses.
class ExceedsMaxError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (vertex names, state strings, cache files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpcops
