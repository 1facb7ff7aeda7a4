#pragma once

// Command-line front end. Data goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 internal invariant violation (including a failed
// `verify`), 2 configuration error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace modknot::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kWorkersEnv = "MODKNOT_WORKERS";

enum class Command { Enumerate, Symbols, Density, Cauchy, Winding, Verify };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Enumerate;
  std::optional<std::int64_t> trace_bound;
  std::optional<double> length_bound;
  std::int64_t modulus = 2;
  Format format = Format::Csv;
  int n_terms = 0;        // 0: automatic
  std::size_t n_samples = 64;
  int worker_count = 1;
  std::int64_t oracle_guard = 20;
  std::vector<double> bin_edges;  // cauchy; empty: default edges
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty
};

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Never throws on invalid configs or invariant violations; reports them
/// through the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suite behind `verify`.
std::vector<CheckResult> run_verification(const RunConfig& cfg);

}  // namespace modknot::cli
