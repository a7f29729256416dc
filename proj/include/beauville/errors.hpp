#pragma once

#include <stdexcept>
#include <string>

namespace beauville {

// n is not a Beauville level (gcd(n,6) != 1 or n < 5), or exceeds an operation's cap.
class LevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration or oracle request above the configured size budget.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A counting identity that must hold exactly did not. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace beauville
