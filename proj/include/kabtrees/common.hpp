#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kabtrees {

/// Exact unbounded natural number used for every count and bound.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

/// Raised for arguments outside an operation's domain (m <= 0, a > b, ...).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class SumMismatch : public UsageError {
  public:
    using UsageError::UsageError;
};

class NotMonotone : public UsageError {
  public:
    using UsageError::UsageError;
};

class InvalidTree : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class CodeOutOfRange : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A bound requested outside the hypothesis under which it is proven.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(const std::string& what, Natural required)
        : std::runtime_error(what), required_(std::move(required)) {}

    const Natural& required() const noexcept { return required_; }

  private:
    Natural required_;
};

/// base^exp with exact arithmetic.
inline Natural ipow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(Natural(base), static_cast<unsigned>(exp));
}

}  // namespace kabtrees
