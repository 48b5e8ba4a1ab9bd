// hall: search for and verify good examples of Hall's conjecture, i.e.
// x^3 - y^2 = k with 0 < |k| < sqrt(x).
//
//   hall search --q-lo 2 --q-hi 100 [--q-max N] [--workers N]
//               [--checkpoint FILE] [--format jsonl|csv|table] [--output FILE]
//   hall oracle LO HI
//   hall verify [X ...]      (default: the 50 known examples)
//   hall table  [X ...]

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hall/cli/driver.hpp"
#include "hall/cli/table1.hpp"

namespace {

std::vector<hall::Natural> parse_all(const std::vector<std::string>& args) {
  std::vector<hall::Natural> out;
  for (const auto& a : args) out.push_back(hall::parse_natural(a));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search and verification tools for good examples of Hall's conjecture"};
  app.require_subcommand(1);

  std::string format_name = "jsonl";
  std::string output_path;

  hall::cli::SearchConfig config;
  std::uint64_t q_max = 0;
  std::string checkpoint_path;
  std::uint64_t max_units = 0;
  auto* search = app.add_subcommand("search", "Run the quadruple sieve over a range of q");
  search->add_option("--q-lo", config.q_lo, "First denominator q (>= 2)")->required();
  search->add_option("--q-hi", config.q_hi, "Last denominator q")->required();
  search->add_option("--q-max", q_max, "Bound defining x_max = q_max^6 (default: q-hi)");
  search->add_option("--workers", config.workers, "Parallel q-units")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint_path, "Append-only progress log; resumes if present");
  search->add_option("--format", format_name, "jsonl, csv or table")
      ->check(CLI::IsMember({"jsonl", "csv", "table"}));
  search->add_option("--output", output_path, "Output file (default: stdout)");
  search->add_option("--max-units", max_units, "Stop after this many q-units (exit 3)")
      ->check(CLI::PositiveNumber);

  std::string lo_text, hi_text;
  auto* oracle = app.add_subcommand("oracle", "Brute-force scan of x in [lo, hi]");
  oracle->add_option("lo", lo_text, "Lowest x (>= 2)")->required();
  oracle->add_option("hi", hi_text, "Highest x")->required();
  oracle->add_option("--format", format_name, "jsonl, csv or table")
      ->check(CLI::IsMember({"jsonl", "csv", "table"}));
  oracle->add_option("--output", output_path, "Output file (default: stdout)");

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "Verify x values against all bounds");
  verify->add_option("x", verify_args, "x values (default: the 50 known examples)");

  std::vector<std::string> table_args;
  auto* table = app.add_subcommand("table", "Render #, x, r, p/q rows");
  table->add_option("x", table_args, "x values (default: the 50 known examples)");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto format = hall::cli::parse_format(format_name);
    std::optional<std::filesystem::path> output;
    if (!output_path.empty()) output = output_path;

    if (*search) {
      config.q_max = q_max ? q_max : config.q_hi;
      config.format = format;
      config.output = output;
      if (!checkpoint_path.empty()) config.checkpoint = checkpoint_path;
      if (max_units) config.max_units = max_units;
      return hall::cli::cmd_search(config, std::cout, std::cerr);
    }
    if (*oracle) {
      return hall::cli::cmd_oracle(hall::parse_natural(lo_text), hall::parse_natural(hi_text),
                                   format, output, std::cout, std::cerr);
    }
    if (*verify) {
      auto xs = verify_args.empty() ? hall::cli::known_x_values() : parse_all(verify_args);
      return hall::cli::cmd_verify(xs, std::cout);
    }
    if (*table) {
      auto xs = table_args.empty() ? hall::cli::known_x_values() : parse_all(table_args);
      return hall::cli::cmd_table(xs, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "hall: " << e.what() << '\n';
    return hall::cli::kExitUsage;
  }
  return hall::cli::kExitUsage;
}
