#pragma once

#include <stdexcept>
#include <string>

namespace srs {

// Malformed input text: graph files, decomposition files, degree-set syntax.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural rule was violated: decomposition axioms, solver preconditions,
// or an internal consistency check that must never fire on valid data.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace srs
