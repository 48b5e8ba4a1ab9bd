#include "hall/cli/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

namespace hall::cli {

namespace {

std::string header_line(std::uint64_t q_max) {
  return "hall-checkpoint v1 q_max=" + std::to_string(q_max);
}

std::uint64_t parse_q(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad q");
  return v;
}

}  // namespace

Checkpoint Checkpoint::open(const std::filesystem::path& path, std::uint64_t q_max) {
  std::set<std::uint64_t> completed;
  std::map<std::uint64_t, std::vector<Record>> pending;
  std::map<std::uint64_t, std::vector<Record>> found;
  std::uintmax_t valid_bytes = 0;
  bool fresh = true;

  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      // A line without its newline is a torn write; drop it.
      if (in.eof()) break;
      if (lineno == 1) {
        if (line != header_line(q_max)) {
          throw std::runtime_error("checkpoint " + path.string() +
                                   " was written for a different q_max (" + line + ")");
        }
        fresh = false;
      } else {
        try {
          if (line.rfind("done ", 0) == 0) {
            const std::uint64_t q = parse_q(line.substr(5));
            completed.insert(q);
            auto& recs = pending[q];
            auto& dst = found[q];
            dst.insert(dst.end(), recs.begin(), recs.end());
            pending.erase(q);
          } else if (line.rfind("found ", 0) == 0) {
            const std::size_t sp = line.find(' ', 6);
            if (sp == std::string::npos) throw std::invalid_argument("bad found line");
            const std::uint64_t q = parse_q(line.substr(6, sp - 6));
            pending[q].push_back(parse_jsonl(std::string_view(line).substr(sp + 1)));
          } else {
            throw std::invalid_argument("unknown entry");
          }
        } catch (const std::exception& e) {
          throw std::runtime_error("corrupt checkpoint " + path.string() + " line " +
                                   std::to_string(lineno) + ": " + e.what());
        }
      }
      valid_bytes += line.size() + 1;
    }
    std::filesystem::resize_file(path, valid_bytes);
  }

  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "ab"));
  if (!file) throw std::runtime_error("cannot write checkpoint " + path.string());
  Checkpoint cp(path, std::move(file));
  cp.completed_ = std::move(completed);
  cp.found_ = std::move(found);
  if (fresh) cp.append(header_line(q_max) + "\n");
  return cp;
}

std::vector<Record> Checkpoint::found() const {
  std::vector<Record> out;
  for (const auto& [q, recs] : found_) out.insert(out.end(), recs.begin(), recs.end());
  return out;
}

void Checkpoint::commit(std::uint64_t q, const std::vector<Record>& records) {
  std::ostringstream text;
  for (const auto& rec : records) text << "found " << q << ' ' << to_jsonl(rec) << '\n';
  append(text.str());
  append("done " + std::to_string(q) + "\n");
  completed_.insert(q);
  auto& dst = found_[q];
  dst.insert(dst.end(), records.begin(), records.end());
}

void Checkpoint::append(const std::string& text) {
  if (std::fwrite(text.data(), 1, text.size(), file_.get()) != text.size() ||
      std::fflush(file_.get()) != 0 || ::fsync(::fileno(file_.get())) != 0) {
    throw std::runtime_error("failed writing checkpoint " + path_.string());
  }
}

}  // namespace hall::cli
