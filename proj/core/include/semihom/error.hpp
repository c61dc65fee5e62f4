#pragma once

#include <stdexcept>
#include <string>

namespace semihom {

/// Parameter or argument outside the range an operation accepts.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs are well formed but a theorem hypothesis (e.g. d >= 2) fails.
class HypothesisViolated : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Oracle enumeration would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The reduction of a polynomial is singular where smoothness is required.
class NonSmoothReduction : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}
inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}
}  // namespace detail

}  // namespace semihom
