#pragma once

#include <stdexcept>

namespace linecrit {

// Random instance construction ran out of its retry budget.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix does not descend to a homomorphism of the given quotients.
struct induction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to run outside its size guard.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was requested for a base point that violates its
// preconditions.
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linecrit
