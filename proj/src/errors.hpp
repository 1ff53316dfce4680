#pragma once

#include <stdexcept>
#include <string>

namespace quatrec {

// Anything wrong with caller-supplied data: scalar grammar, dimensions,
// ring mismatches, malformed files. Maps to CLI exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quatrec
