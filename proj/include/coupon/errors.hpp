#pragma once

#include <stdexcept>
#include <string>

namespace coupon {

// Argument outside an operation's documented domain. CLI exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured capacity limit (table size, work budget).
// CLI exit code 3.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Two redundant computation paths disagree beyond their error budget.
// CLI exit code 4.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coupon
