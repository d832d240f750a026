#pragma once

#include <stdexcept>

namespace smallcover {

// Invalid user input: malformed files, failed structural invariants, bad ids.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap (word growth, hom-count search) was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mandatory internal post-check failed. Signals a bug, not bad input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace smallcover
