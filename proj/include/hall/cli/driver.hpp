#pragma once

// Command implementations behind the `hall` executable. They write to the
// given streams and return a process exit status, so tests can drive them
// without spawning processes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hall/cli/records.hpp"
#include "hall/sieve.hpp"

namespace hall::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIncomplete = 3;

struct SearchConfig {
  std::uint64_t q_lo = 2;
  std::uint64_t q_hi = 2;
  std::uint64_t q_max = 2;  // x_max = q_max^6
  unsigned workers = 1;
  std::optional<std::filesystem::path> checkpoint;
  Format format = Format::Jsonl;
  std::optional<std::filesystem::path> output;
  /// Stop after this many new q-units (leaves the checkpoint resumable).
  std::optional<std::uint64_t> max_units;

  /// Throws std::invalid_argument unless 2 <= q_lo <= q_hi <= q_max.
  void validate() const;
};

struct SearchRun {
  std::vector<Record> records;  // sorted by x; empty unless complete
  bool complete = false;
  std::uint64_t units_run = 0;
  sieve::Counters counters;
};

/// Runs the sieve over the configured q range on `workers` threads,
/// largest q first, committing each finished q to the checkpoint.
SearchRun run_search(const SearchConfig& config);

int cmd_search(const SearchConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const Natural& lo, const Natural& hi, Format format,
               const std::optional<std::filesystem::path>& output, std::ostream& out,
               std::ostream& err);

struct VerifyResult {
  bool pass = false;
  std::string line;
};

/// Checks one x: goodness, selected convergent, every bound, and the
/// recovery round trip. Values from the built-in table are also compared
/// against its published p/q.
VerifyResult verify_one(const Natural& x);

int cmd_verify(const std::vector<Natural>& xs, std::ostream& out);

/// Four columns: #, x, r, p/q. Row numbers follow the built-in table when x
/// appears in it.
std::vector<std::string> render_table(const std::vector<Natural>& xs);
int cmd_table(const std::vector<Natural>& xs, std::ostream& out, std::ostream& err);

}  // namespace hall::cli
