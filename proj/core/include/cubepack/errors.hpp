#pragma once

#include <stdexcept>
#include <string>

namespace cubepack {

// Thrown when an operation would enumerate or sweep beyond its stated budget.
// Callers (the CLI in particular) map this to a dedicated exit status.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files (certificates, code listings, distance tables).
// Messages carry a line number where one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubepack
