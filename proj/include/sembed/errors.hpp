#pragma once

#include <stdexcept>

namespace sembed {

// Unreadable or malformed input data. Mapped to exit code 2 by the CLI.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A well-formed query that cannot be answered (e.g. unknown scholar id).
// Mapped to exit code 3 by the CLI.
struct QueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Mapped to exit code 4 by the CLI.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sembed
