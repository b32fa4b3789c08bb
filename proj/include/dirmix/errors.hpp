#pragma once

#include <stdexcept>
#include <string>

namespace dirmix {

// Raised when a caller breaks an operation's precondition (length mismatch,
// composition that does not sum to its order, zero scale, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation has no meaning for the given distribution,
// e.g. the density of a point mass.
class UnsupportedOperation : public std::logic_error {
 public:
  explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

// Malformed textual input: rational literals, distribution spec strings,
// moments files.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dirmix
