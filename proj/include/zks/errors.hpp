#pragma once

#include <stdexcept>
#include <string>

namespace zks {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live over different k or different coefficient rings, or a chain
// has the wrong degree for the requested operation.
struct dimension_error : error {
  using error::error;
};

// An argument is outside its documented range (r, j, power, ...).
struct domain_error : error {
  using error::error;
};

// Malformed input document or identifier.
struct format_error : error {
  using error::error;
};

// A theorem hypothesis that the caller must supply does not hold
// (non-equivariant labelling, kR = R, non-free action, ...).
struct precondition_error : error {
  using error::error;
};

// Randomized generation exhausted its retry budget.
struct generation_error : error {
  using error::error;
};

// An enumeration would exceed the configured size cap.
struct size_error : error {
  using error::error;
};

}  // namespace zks
