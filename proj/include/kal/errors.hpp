#ifndef KAL_ERRORS_HPP_
#define KAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kal {

// Malformed input: bad letters, index out of range, alphabet mismatch.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closure or enumeration would exceed the configured materialization cap.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kal

#endif  // KAL_ERRORS_HPP_
