#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcat {

// Bad user input: malformed words, weights that are not dominant, ranks out
// of range.  The CLI maps this to exit status 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured object budget.  CLI exit 3.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that cannot fail for correct code (an inexact
// division in a product formula, a non-bijective map that is proven to be a
// bijection, ...).  Seeing one of these means there is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Global object budget for exhaustive enumerations.  Defaults to 10^7.
std::uint64_t resource_cap();
void set_resource_cap(std::uint64_t cap);

// Throws ResourceCapError when `count` exceeds the budget.
void check_cap(std::uint64_t count, const std::string& what);

}  // namespace lcat
