#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

/// An enumeration or size limit would be exceeded by the requested computation.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed, or a
/// mathematically guaranteed property failed to hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hallforge
