#pragma once

#include <stdexcept>
#include <string>

namespace binform {

/// Raised when an argument lies outside an operation's mathematical domain
/// (k > n for a binomial, valuation of zero, degree too small for an area, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a numeric procedure that must converge did not.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binform
