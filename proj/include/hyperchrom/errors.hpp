#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperchrom {

/// Malformed input: bad hypergraph, bad list assignment, bad permutation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain where a function is defined (e.g. rho with m < 2).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised instead of starting an enumeration that would exceed its cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what_cap, long double required, long double allowed)
      : std::runtime_error(describe(what_cap, required, allowed)),
        cap_(std::move(what_cap)),
        required_(required),
        allowed_(allowed) {}

  const std::string& cap() const noexcept { return cap_; }
  long double required() const noexcept { return required_; }
  long double allowed() const noexcept { return allowed_; }

 private:
  static std::string describe(const std::string& cap, long double required, long double allowed);

  std::string cap_;
  long double required_;
  long double allowed_;
};

}  // namespace hyperchrom
