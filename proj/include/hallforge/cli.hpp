#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hallforge/hall_engine.hpp"

namespace hallforge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kBoundExceeded = 3,
  kCacheCorrupt = 4,
};

/// "fq:<q>:<N>", "fq:<q>" (N large enough for every label of the given
/// size), "fq" with q supplied separately, "f1" or "f1t". Throws
/// std::invalid_argument on anything else.
std::unique_ptr<HallBackend> make_backend(const std::string& id, std::optional<int> q, int size);

/// Partition from comma-separated decreasing parts; "" is the empty
/// partition. Throws std::invalid_argument on increasing or malformed input.
Partition parse_partition_arg(const std::string& text);

struct SuiteOptions {
  std::vector<int> q_values;  // empty: the suite's default
  int dim = 2;                // green, segal
  int size = 4;               // zelevinsky, symfunc, statistics, f1-bridge
  int path_size = 14;         // statistics: lattice paths with m + n <= path_size
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  nlohmann::json failures = nlohmann::json::array();

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws std::invalid_argument for an unknown
/// suite and BoundError when a bound is exceeded.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

/// Entry point behind the hallforge executable; args excludes the program
/// name. The cache directory comes from --cache-dir or HALLFORGE_CACHE.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hallforge::cli
