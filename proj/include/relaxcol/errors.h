#ifndef RELAXCOL_ERRORS_H_
#define RELAXCOL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace relaxcol {

// A numeric parameter lies outside the documented domain of an operation
// (e.g. a cycle on fewer than three vertices).
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally malformed input: partial colorings, non-permutation orders,
// disconnected graphs where connectivity is required, and so on.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact solver hit its node cap. Never conflated with "no coloring".
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee that should hold on every valid input was observed to fail.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace relaxcol

#endif  // RELAXCOL_ERRORS_H_
