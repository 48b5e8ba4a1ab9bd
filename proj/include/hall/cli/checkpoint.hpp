#pragma once

// Append-only search log. Layout, one entry per line:
//
//   hall-checkpoint v1 q_max=<n>
//   found <q> <jsonl record>
//   done <q>
//
// The found lines of a q-unit are written before its done line, so a
// crash can only leave found lines for an unfinished unit; replay drops
// those and a truncated final line.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "hall/cli/records.hpp"

namespace hall::cli {

class Checkpoint {
 public:
  /// Replays an existing log or starts a new one. Throws std::runtime_error
  /// if the file cannot be written, is corrupt, or belongs to another q_max.
  static Checkpoint open(const std::filesystem::path& path, std::uint64_t q_max);

  const std::set<std::uint64_t>& completed() const { return completed_; }

  /// Records of all completed units, in log order.
  std::vector<Record> found() const;

  /// Appends the unit's records, then its done line, and syncs to disk.
  void commit(std::uint64_t q, const std::vector<Record>& records);

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };

  Checkpoint(std::filesystem::path path, std::unique_ptr<std::FILE, FileCloser> file)
      : path_(std::move(path)), file_(std::move(file)) {}

  void append(const std::string& text);

  std::filesystem::path path_;
  std::unique_ptr<std::FILE, FileCloser> file_;
  std::set<std::uint64_t> completed_;
  std::map<std::uint64_t, std::vector<Record>> found_;
};

}  // namespace hall::cli
