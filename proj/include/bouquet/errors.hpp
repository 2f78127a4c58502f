#ifndef BOUQUET_ERRORS_HPP
#define BOUQUET_ERRORS_HPP

#include <stdexcept>

namespace bouquet {

// Well-formed request outside the supported mathematical scope
// (degenerate parameter, unsupported dimension, out-of-range regime).
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace bouquet

#endif
