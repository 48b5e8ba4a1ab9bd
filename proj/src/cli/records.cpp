#include "hall/cli/records.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "hall/cf.hpp"
#include "hall/oracle.hpp"

namespace hall::cli {

using nlohmann::ordered_json;
using hall::to_string;

std::string_view to_string(Source s) { return s == Source::Sieve ? "sieve" : "oracle"; }

Source parse_source(std::string_view text) {
  if (text == "sieve") return Source::Sieve;
  if (text == "oracle") return Source::Oracle;
  throw std::invalid_argument("unknown source: " + std::string(text));
}

Format parse_format(std::string_view text) {
  if (text == "jsonl") return Format::Jsonl;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

Record make_record(const GoodTriplet& t, Source source) {
  Record rec{t.x, t.y, t.k, 0, 0, oracle::hall_ratio(t.x, t.k), source};
  if (t.approx) {
    rec.p = t.approx->p;
    rec.q = t.approx->q;
  } else {
    auto sel = select_approx(t.x);
    rec.p = sel.p;
    rec.q = sel.q;
  }
  return rec;
}

GoodTriplet to_triplet(const Record& rec) {
  return GoodTriplet{rec.x, rec.y, rec.k, Approximation{rec.p, rec.q}};
}

std::string to_jsonl(const Record& rec) {
  ordered_json j;
  j["x"] = to_string(rec.x);
  j["y"] = to_string(rec.y);
  j["k"] = to_string(rec.k);
  j["p"] = to_string(rec.p);
  j["q"] = to_string(rec.q);
  j["r"] = rec.r;
  j["source"] = std::string(to_string(rec.source));
  return j.dump();
}

Record parse_jsonl(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("bad record: not an object");
  auto field = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw std::invalid_argument(std::string("bad record: missing ") + key);
    }
    return it->get<std::string>();
  };
  Record rec;
  rec.x = parse_natural(field("x"));
  rec.y = parse_natural(field("y"));
  rec.k = parse_integer(field("k"));
  rec.p = parse_natural(field("p"));
  rec.q = parse_natural(field("q"));
  rec.r = field("r");
  rec.source = parse_source(field("source"));
  return rec;
}

std::string csv_header() { return "x,y,k,p,q,r,source"; }

std::string to_csv(const Record& rec) {
  return to_string(rec.x) + ',' + to_string(rec.y) + ',' + to_string(rec.k) + ',' +
         to_string(rec.p) + ',' + to_string(rec.q) + ',' + rec.r + ',' +
         std::string(to_string(rec.source));
}

void write_records(std::ostream& out, const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::Jsonl:
      for (const auto& rec : records) out << to_jsonl(rec) << '\n';
      return;
    case Format::Csv:
      out << csv_header() << '\n';
      for (const auto& rec : records) out << to_csv(rec) << '\n';
      return;
    case Format::Table: {
      std::vector<std::array<std::string, 6>> rows;
      rows.push_back({"x", "y", "k", "r", "p/q", "source"});
      for (const auto& rec : records) {
        rows.push_back({to_string(rec.x), to_string(rec.y), to_string(rec.k), rec.r,
                        to_string(rec.p) + "/" + to_string(rec.q),
                        std::string(to_string(rec.source))});
      }
      std::array<std::size_t, 6> width{};
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += "  ";
          // numbers right-aligned, the trailing source column left-aligned
          if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
          line += row[i];
        }
        out << line << '\n';
      }
      return;
    }
  }
}

}  // namespace hall::cli
