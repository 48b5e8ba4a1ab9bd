#include "hall/cli/driver.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hall/cf.hpp"
#include "hall/cli/checkpoint.hpp"
#include "hall/cli/table1.hpp"
#include "hall/oracle.hpp"

namespace hall::cli {

using hall::to_string;

namespace {

// Writes the whole output to <path>.tmp and renames it into place.
class OutputFile {
 public:
  explicit OutputFile(std::filesystem::path path)
      : path_(std::move(path)), tmp_(path_.string() + ".tmp"), stream_(tmp_, std::ios::binary) {
    if (!stream_) throw std::runtime_error("cannot write output " + path_.string());
  }

  OutputFile(const OutputFile&) = delete;
  OutputFile& operator=(const OutputFile&) = delete;

  ~OutputFile() {
    if (committed_) return;
    stream_.close();
    std::error_code ec;
    std::filesystem::remove(tmp_, ec);
  }

  std::ostream& stream() { return stream_; }

  void commit() {
    stream_.close();
    if (!stream_) throw std::runtime_error("failed writing output " + path_.string());
    std::filesystem::rename(tmp_, path_);
    committed_ = true;
  }

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream stream_;
  bool committed_ = false;
};

std::vector<Record> to_records(const std::vector<GoodTriplet>& triplets, Source source) {
  std::vector<Record> out;
  out.reserve(triplets.size());
  for (const auto& t : triplets) out.push_back(make_record(t, source));
  return out;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

void SearchConfig::validate() const {
  if (q_lo < 2 || q_lo > q_hi || q_hi > q_max) {
    throw std::invalid_argument("need 2 <= q-lo <= q-hi <= q-max");
  }
  if (q_max > sieve::kMaxQ) {
    throw std::invalid_argument("q-max may not exceed " + std::to_string(sieve::kMaxQ));
  }
  if (workers == 0) throw std::invalid_argument("workers must be positive");
}

SearchRun run_search(const SearchConfig& config) {
  config.validate();

  std::optional<Checkpoint> checkpoint;
  std::vector<GoodTriplet> triplets;
  if (config.checkpoint) {
    checkpoint.emplace(Checkpoint::open(*config.checkpoint, config.q_max));
    for (const auto& rec : checkpoint->found()) {
      const auto q = rec.q.get_ui();
      if (q >= config.q_lo && q <= config.q_hi) triplets.push_back(to_triplet(rec));
    }
  }

  // Largest q first: per-unit cost grows with q.
  std::vector<std::uint64_t> pending;
  for (std::uint64_t q = config.q_hi; q >= config.q_lo; --q) {
    if (!checkpoint || !checkpoint->completed().contains(q)) pending.push_back(q);
  }

  SearchRun run;
  std::mutex sink_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> claimed{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      if (config.max_units && claimed.fetch_add(1) >= *config.max_units) return;
      const std::size_t idx = next.fetch_add(1);
      if (idx >= pending.size()) return;
      const std::uint64_t q = pending[idx];

      std::vector<GoodTriplet> found;
      sieve::Counters counters;
      try {
        sieve::search_q(q, config.q_max, [&](const GoodTriplet& t) { found.push_back(t); },
                        &counters);
        std::scoped_lock lock(sink_mutex);
        if (checkpoint) checkpoint->commit(q, to_records(found, Source::Sieve));
        triplets.insert(triplets.end(), found.begin(), found.end());
        run.counters += counters;
        ++run.units_run;
      } catch (...) {
        std::scoped_lock lock(sink_mutex);
        if (!failure) failure = std::current_exception();
        next.store(pending.size());
        return;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(config.workers, pending.size()));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t done = run.units_run;
  if (checkpoint) {
    done = 0;
    for (std::uint64_t q : checkpoint->completed()) {
      if (q >= config.q_lo && q <= config.q_hi) ++done;
    }
  }
  run.complete = done == config.q_hi - config.q_lo + 1;
  if (run.complete) {
    std::vector<GoodTriplet> merged;
    sieve::merge_unique(merged, std::move(triplets));
    run.records = to_records(merged, Source::Sieve);
    run.counters.found = run.records.size();
  }
  return run;
}

int cmd_search(const SearchConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    std::optional<OutputFile> file;
    if (config.output) file.emplace(*config.output);

    SearchRun run = run_search(config);
    err << "search: " << run.units_run << " q-units run, " << run.counters.quadruples
        << " quadruple states, " << run.counters.recoveries << " recoveries";
    if (!run.complete) {
      err << "; stopped early, resume with the same --checkpoint\n";
      return kExitIncomplete;
    }
    err << ", " << run.records.size() << " good triplets\n";

    if (file) {
      write_records(file->stream(), run.records, config.format);
      file->commit();
    } else {
      write_records(out, run.records, config.format);
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "search: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "search: " << e.what() << '\n';
    return kExitFail;
  }
}

int cmd_oracle(const Natural& lo, const Natural& hi, Format format,
               const std::optional<std::filesystem::path>& output, std::ostream& out,
               std::ostream& err) {
  try {
    if (lo < 2 || lo > hi) throw std::invalid_argument("need 2 <= lo <= hi");
    std::optional<OutputFile> file;
    if (output) file.emplace(*output);
    const auto records = to_records(oracle::scan(lo, hi), Source::Oracle);
    if (file) {
      write_records(file->stream(), records, format);
      file->commit();
    } else {
      write_records(out, records, format);
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "oracle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "oracle: " << e.what() << '\n';
    return kExitFail;
  }
}

VerifyResult verify_one(const Natural& x) {
  std::ostringstream line;
  line << "x=" << x;
  if (x < 2) {
    line << " FAIL x must be at least 2";
    return {false, line.str()};
  }
  const auto triplet = oracle::goodness(x);
  if (!triplet) {
    const Natural cube = x * x * x;
    const Natural s = isqrt(cube);
    if (s * s == cube) {
      line << " FAIL not a good triplet (k=0)";
    } else {
      line << " FAIL not a good triplet (|k| >= sqrt(x))";
    }
    return {false, line.str()};
  }

  const DerivedQuadruple derived = quadruple_from_triplet(*triplet);
  const BoundsReport& b = derived.bounds;
  bool pass = b.all() && derived.quad.has_value();

  bool round_trip = false;
  if (derived.quad) {
    const auto outcome = recover(*derived.quad);
    if (const auto* t = std::get_if<GoodTriplet>(&outcome)) {
      round_trip = t->x == triplet->x && t->y == triplet->y && t->k == triplet->k;
    }
  }
  pass = pass && round_trip;

  line << " y=" << triplet->y << " k=" << triplet->k
       << " r=" << oracle::hall_ratio(x, triplet->k) << " p/q=" << derived.approx.p << '/'
       << derived.approx.q << " quad=(" << derived.approx.q << ", " << derived.image.f_val
       << ", " << derived.image.c_val << ", " << derived.image.h_val << ")"
       << " c>0:" << verdict(b.c_positive) << " c<3qx^(1/6)+1:" << verdict(b.c_upper)
       << " |f|<=8q:" << verdict(b.f_bound) << " |h|<=72q^4:" << verdict(b.h_bound)
       << " q<x^(1/6):" << verdict(b.q_bound) << " p<x^(2/3)+1:" << verdict(b.p_bound)
       << " roundtrip:" << verdict(round_trip);

  if (const KnownExample* known = find_known(x); known && !known->q.empty()) {
    const bool match = to_string(derived.approx.p) == known->p &&
                       to_string(derived.approx.q) == known->q;
    line << " table-p/q:" << verdict(match);
    pass = pass && match;
  }
  line << ' ' << verdict(pass);
  return {pass, line.str()};
}

int cmd_verify(const std::vector<Natural>& xs, std::ostream& out) {
  bool all = true;
  for (const auto& x : xs) {
    VerifyResult res = verify_one(x);
    all = all && res.pass;
    out << res.line << '\n';
  }
  return all ? kExitOk : kExitFail;
}

std::vector<std::string> render_table(const std::vector<Natural>& xs) {
  std::vector<std::string> lines{"#  x  r  p/q"};
  int position = 0;
  for (const auto& x : xs) {
    ++position;
    const KnownExample* known = find_known(x);
    const int index = known ? known->index : position;
    const auto triplet = x >= 2 ? oracle::goodness(x) : std::nullopt;
    if (!triplet) {
      lines.push_back(std::to_string(index) + "  " + to_string(x) + "  not a good example");
      continue;
    }
    const std::string r = oracle::hall_ratio(x, triplet->k);
    const SelectedApprox sel = select_approx(x);
    std::string row = std::to_string(index) + "  " + to_string(x) + "  " + r + "  " +
                      to_string(sel.p) + "/" + to_string(sel.q);
    if (known && known->r != r) {
      row += "  (published r=" + std::string(known->r) + ", differs in rounding)";
    }
    lines.push_back(std::move(row));
  }
  return lines;
}

int cmd_table(const std::vector<Natural>& xs, std::ostream& out, std::ostream& err) {
  try {
    bool all_good = true;
    for (const auto& line : render_table(xs)) {
      out << line << '\n';
      if (line.ends_with("not a good example")) all_good = false;
    }
    return all_good ? kExitOk : kExitFail;
  } catch (const std::exception& e) {
    err << "table: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace hall::cli
