#ifndef QALLOC_ERRORS_HPP
#define QALLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qalloc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data or a violated precondition (wrong kind, n does not divide m,
/// non-binary matrix passed to a binary solver, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but no polynomial algorithm is offered for it,
/// e.g. unbalanced ESW at a quantile outside the tractable family.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qalloc

#endif  // QALLOC_ERRORS_HPP
