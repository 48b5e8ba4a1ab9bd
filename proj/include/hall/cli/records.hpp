#pragma once

// Result records as written by the command-line tool. Every numeric field
// is an exact decimal string.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hall/numeric.hpp"
#include "hall/polys.hpp"

namespace hall::cli {

enum class Source { Sieve, Oracle };
enum class Format { Jsonl, Csv, Table };

struct Record {
  Natural x;
  Natural y;
  Integer k;
  Natural p;
  Natural q;
  std::string r;
  Source source = Source::Sieve;

  friend bool operator==(const Record&, const Record&) = default;
};

std::string_view to_string(Source s);
Source parse_source(std::string_view text);
Format parse_format(std::string_view text);

/// Fills p/q from the triplet's approximation, or from the selected
/// convergent of sqrt(x) when the triplet carries none.
Record make_record(const GoodTriplet& t, Source source);

/// Inverse of make_record (r and source are dropped).
GoodTriplet to_triplet(const Record& rec);

std::string to_jsonl(const Record& rec);
/// Throws std::invalid_argument on malformed input.
Record parse_jsonl(std::string_view line);

std::string csv_header();
std::string to_csv(const Record& rec);

void write_records(std::ostream& out, const std::vector<Record>& records, Format format);

}  // namespace hall::cli
