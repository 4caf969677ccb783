#pragma once

#include <string>

namespace hallforge {

/// Outcome of an exhaustive or sampled consistency check.
struct CheckReport {
  bool ok = true;
  std::string detail;  // first discrepancy when !ok
};

}  // namespace hallforge
