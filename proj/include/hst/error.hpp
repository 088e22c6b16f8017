#pragma once

#include <stdexcept>
#include <string>

namespace hst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input violates a precondition (bad index, dimension mismatch, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// The point set is not in general position where the operation needs it.
struct DegenerateInput : Error {
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Malformed persistent data (point files, tree files, CSV).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hst
