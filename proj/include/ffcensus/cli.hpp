#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffcensus/census.hpp"
#include "ffcensus/poly.hpp"

namespace ffcensus::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct NRange {
  unsigned lo = 1;
  unsigned hi = 1;
};

// "lo..hi" (inclusive) or a single "n".
NRange parse_n_range(std::string_view text);

struct RunConfig {
  std::string field_spec = "2";
  std::optional<std::string> k_spec;
  std::string l_spec = "all-units";
  std::optional<NRange> n_range;
  bool primes_only = false;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "csv";
  std::string out_path;  // empty: standard output
  std::string suite = "all";
  int threads = 0;  // not echoed into reports; output must not depend on it
  std::string poly_arg;  // positional argument of `factor`
};

// The degrees a command iterates over, after the --primes-only filter.
std::vector<unsigned> selected_degrees(const NRange& range, bool primes_only);

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> notes;  // per-item tables and failure descriptions

  bool pass() const noexcept { return failed == 0; }
};

struct SuiteInput {
  Field field;
  std::optional<Poly> k;
  NRange n;
  bool primes_only = false;
  ScanOptions scan;
};

// Suite identifiers accepted by `verify --suite`, in the order `all` runs them.
const std::vector<std::string>& suite_names();
// Accepts the identifiers above plus the display alias "lambda-total".
SuiteResult run_suite(std::string_view name, const SuiteInput& input);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffcensus::cli
