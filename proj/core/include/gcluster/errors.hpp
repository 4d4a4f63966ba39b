#pragma once

#include <stdexcept>
#include <string>

namespace gcluster {

// Mismatched variable tables, missing map entries, malformed structures.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Operation applied outside its domain (frozen vertex, bad index, zero valuation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exchange relation did not divide exactly: the input is not a regular structure.
class NonRegularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A check that should be impossible to fail when the theory applies.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coefficient denominator vanishes modulo the chosen prime; retry with another.
class ModularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace gcluster
