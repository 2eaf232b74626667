#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ledin/oracle.hpp"
#include "ledin/routes.hpp"

namespace ledin::cli {

enum class Subcommand { sum, form, table, verify };
enum class OutputFormat { text, json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_invalid = 2;

struct CliRequest {
  Subcommand subcommand = Subcommand::sum;
  unsigned m = 0;
  unsigned long n = 0;
  long r = 0;
  unsigned h = 1;
  bool weighted = false;
  std::string sequence = "fibonacci";
  HoradamParams params = fibonacci_params();
  OutputFormat format = OutputFormat::text;
  std::optional<Route> route;
  unsigned max_m = 5;
  GridRanges grid = default_grid();
  bool serial = false;
};

/// Parses argv-style arguments (without the program name).
/// Throws InvalidInput on any malformed or inconsistent argument.
CliRequest parse_request(const std::vector<std::string>& args);

/// Grid literal for `verify --grid`: comma-separated key=value pairs with
/// keys m, n, r, h (either "hi" meaning 0..hi, or "lo..hi"), seq
/// ('+'-separated names from the default grid, or "default") and weighted
/// (yes|no|both). Unspecified keys keep their default-grid value.
GridRanges parse_grid(std::string_view text);

/// Executes a parsed request. Exit codes: 0 success/PASS, 1 verification
/// mismatch, 2 invalid input or guard violation.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// parse_request + run, mapping every failure to a single "error: ..." line
/// on `err` and exit code 2. `--help` prints usage to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

}  // namespace ledin::cli
