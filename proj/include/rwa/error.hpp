#pragma once

#include <stdexcept>
#include <string>

namespace rwa {

/// Raised when an argument violates an operation's precondition
/// (n < 2, count = 0, malformed literal, ...).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a density is evaluated outside its support.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

} // namespace rwa
