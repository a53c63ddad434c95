#pragma once

#include <stdexcept>
#include <string>

namespace kschur {

/// Input violates an operation's precondition (not k-bounded, not a core,
/// size mismatch, ...). The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An engine produced something that cannot happen for correct arithmetic:
/// a nonzero residual, a non-polynomial weight in a polynomial character, a
/// failed self-check. The CLI maps this to exit code 3.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kschur
