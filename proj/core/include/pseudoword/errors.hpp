// Error taxonomy shared across the library.
//
//   std::invalid_argument / ParseError  - bad input from the caller
//   ResourceLimitError                  - a configured size cap was exceeded
//   InternalError                       - a proved-impossible state was reached

#pragma once

#include <stdexcept>
#include <string>

namespace pseudoword {

// A violated internal invariant: indicates a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void internal_check(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace pseudoword
