#include "ledin/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ledin/closed_forms.hpp"
#include "ledin/errors.hpp"
#include "ledin/ledin_recursive.hpp"
#include "ledin/report.hpp"

namespace ledin::cli {

namespace {

std::vector<std::string> split(std::string_view text, char separator) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto next = text.find(separator, start);
    parts.emplace_back(text.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  return parts;
}

long parse_integer(std::string_view text, const std::string& what) {
  const Scalar value = parse_scalar(text);
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw InvalidInput(what + " must be an integer, got '" + std::string(text) + "'");
  }
  return value.get_num().get_si();
}

HoradamParams parse_params(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw InvalidInput("--params expects a,b,p,q");
  return {parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2]), parse_scalar(parts[3])};
}

HoradamParams sequence_params(const std::string& name) {
  if (name == "fibonacci") return fibonacci_params();
  if (name == "lucas") return lucas_params();
  if (name == "pell") return HoradamParams(0, 1, 2, -1);
  throw InvalidInput("unknown sequence '" + name + "'");
}

IntRange parse_range(std::string_view text, const std::string& key) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return {0, parse_integer(text, key)};
  return {parse_integer(text.substr(0, dots), key), parse_integer(text.substr(dots + 2), key)};
}

std::string scalars_to_json_list(const Polynomial& poly) {
  std::string text = "[";
  for (std::size_t d = 0; d < poly.coefficients().size(); ++d) {
    if (d != 0) text += ",";
    text += "\"" + to_string(poly.coefficients()[d]) + "\"";
  }
  return text + "]";
}

LedinForm build_form(const CliRequest& request, unsigned m) {
  const Route route = request.route.value_or(Route::ledin_recursive);
  SumSpec shape{m, 0, request.r, 1, request.params, false};
  if (!route_applies(route, shape)) {
    throw InvalidInput("route " + std::string(route_name(route)) + " does not apply to this sequence");
  }
  switch (route) {
    case Route::ledin_recursive:
      return horadam_ledin_recursive(m, request.r, request.params);
    case Route::ledin_explicit:
      return horadam_ledin_explicit(m, request.r, request.params);
    case Route::ledin_restricted:
      return horadam_ledin_restricted(m, request.r, request.params);
    case Route::fibonacci_recursive:
      return fibonacci_ledin_recursive(m, request.r, request.params == lucas_params());
    case Route::fibonacci_explicit: {
      PolyPair polys = p_polys_explicit(m);
      const LedinConstants constants = ledin_constants_explicit(m, request.r);
      return LedinForm{std::move(polys.p1), std::move(polys.p2),
                       request.params == lucas_params() ? constants.k : constants.c, request.r, request.params};
    }
    default:
      throw InvalidInput("route " + std::string(route_name(route)) + " does not produce a Ledin form");
  }
}

std::string form_json(const LedinForm& form, unsigned m) {
  return "{\"m\":" + std::to_string(m) + ",\"r\":" + std::to_string(form.shift) + ",\"p1\":" +
         scalars_to_json_list(form.p1) + ",\"p2\":" + scalars_to_json_list(form.p2) + ",\"constant\":\"" +
         to_string(form.constant) + "\"}";
}

const char* csv_form_header = "m,r,p1,p2,constant";

std::string form_csv(const LedinForm& form, unsigned m) {
  return std::to_string(m) + "," + std::to_string(form.shift) + "," + csv_field(form.p1.to_string()) + "," +
         csv_field(form.p2.to_string()) + "," + csv_field(to_string(form.constant));
}

int run_sum(const CliRequest& request, std::ostream& out, std::ostream& err) {
  const SumSpec spec{request.m, request.n, request.r, request.h, request.params, request.weighted};
  spec.validate();
  SumReport report;
  std::optional<Scalar> chosen;

  if (request.route) {
    // An explicit route is strict: guard failures propagate.
    ClosedFormReport evaluated = evaluate_route(*request.route, spec);
    chosen = evaluated.value;
    report.routes.emplace(std::string(route_name(*request.route)), evaluated.value);
    report.guards = evaluated.guard_denominators;
  } else {
    const Route primary = spec.weighted ? Route::weighted_ap : Route::ap;
    std::set<std::string> seen_guards;
    for (Route route : applicable_routes(spec)) {
      try {
        ClosedFormReport evaluated = evaluate_route(route, spec);
        if (route == primary) chosen = evaluated.value;
        report.routes.emplace(std::string(route_name(route)), evaluated.value);
        for (const auto& g : evaluated.guard_denominators) {
          if (seen_guards.insert(to_string(g)).second) report.guards.push_back(g);
        }
      } catch (const GuardViolation& e) {
        if (route == primary) err << "notice: " << e.what() << "; falling back to brute force\n";
      }
    }
    const Scalar brute = brute_sum(spec);
    report.routes.emplace("brute", brute);
    if (!chosen) chosen = brute;
  }
  report.value = *chosen;

  switch (request.format) {
    case OutputFormat::text:
      out << to_string(report.value) << "\n";
      break;
    case OutputFormat::json:
      out << serialize(report) << "\n";
      break;
    case OutputFormat::csv:
      out << "route,value\n";
      out << "value," << csv_field(to_string(report.value)) << "\n";
      for (const auto& [name, value] : report.routes) out << csv_field(name) << "," << csv_field(to_string(value)) << "\n";
      break;
  }
  return exit_ok;
}

int run_form(const CliRequest& request, std::ostream& out) {
  const LedinForm form = build_form(request, request.m);
  switch (request.format) {
    case OutputFormat::text:
      out << "P1 = " << form.p1.to_string() << "\n";
      out << "P2 = " << form.p2.to_string() << "\n";
      out << "C = " << to_string(form.constant) << "\n";
      break;
    case OutputFormat::json:
      out << form_json(form, request.m) << "\n";
      break;
    case OutputFormat::csv:
      out << csv_form_header << "\n" << form_csv(form, request.m) << "\n";
      break;
  }
  return exit_ok;
}

int run_table(const CliRequest& request, std::ostream& out) {
  std::vector<LedinForm> rows;
  for (unsigned m = 0; m <= request.max_m; ++m) rows.push_back(build_form(request, m));
  switch (request.format) {
    case OutputFormat::text:
      out << "# Ledin forms for " << request.sequence << " (" << request.params.to_string() << "), r = " << request.r
          << "\n";
      for (unsigned m = 0; m <= request.max_m; ++m) {
        out << "m=" << m << "  P1=" << rows[m].p1.to_string() << "  P2=" << rows[m].p2.to_string()
            << "  C=" << to_string(rows[m].constant) << "\n";
      }
      break;
    case OutputFormat::json:
      out << "[";
      for (unsigned m = 0; m <= request.max_m; ++m) out << (m == 0 ? "" : ",") << form_json(rows[m], m);
      out << "]\n";
      break;
    case OutputFormat::csv:
      out << csv_form_header << "\n";
      for (unsigned m = 0; m <= request.max_m; ++m) out << form_csv(rows[m], m) << "\n";
      break;
  }
  return exit_ok;
}

int run_verify(const CliRequest& request, std::ostream& out) {
  const VerificationReport report = request.serial ? verify_grid_serial(request.grid) : verify_grid(request.grid);
  switch (request.format) {
    case OutputFormat::text:
      out << (report.passed() ? "PASS" : "FAIL") << "\n";
      out << "grid: " << report.grid_description << "\n";
      out << "cases: " << report.cases_run << "\n";
      out << "comparisons: " << report.comparisons << "\n";
      out << "guard skips: " << report.guard_skips << "\n";
      out << "mismatches: " << report.mismatches.size() << "\n";
      for (const auto& m : report.mismatches) {
        out << "  " << route_name(m.route) << " " << m.spec.to_string() << " expected " << to_string(m.expected)
            << " got " << to_string(m.got) << "\n";
      }
      out << "wall time: " << report.wall_time << " s\n";
      break;
    case OutputFormat::json:
      out << serialize(report) << "\n";
      break;
    case OutputFormat::csv:
      out << "m,n,r,h,params,weighted,route,expected,got\n";
      for (const auto& m : report.mismatches) {
        out << m.spec.m << "," << m.spec.n << "," << m.spec.r << "," << m.spec.h << ","
            << csv_field(m.spec.params.to_string()) << "," << (m.spec.weighted ? "yes" : "no") << ","
            << route_name(m.route) << "," << csv_field(to_string(m.expected)) << "," << csv_field(to_string(m.got))
            << "\n";
      }
      break;
  }
  return report.passed() ? exit_ok : exit_verification_failed;
}

}  // namespace

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

GridRanges parse_grid(std::string_view text) {
  GridRanges grid = default_grid();
  if (text.empty()) return grid;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("grid entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "m") {
      grid.m = parse_range(value, key);
    } else if (key == "n") {
      grid.n = parse_range(value, key);
    } else if (key == "r") {
      grid.r = parse_range(value, key);
    } else if (key == "h") {
      grid.h = parse_range(value, key);
      if (value.find("..") == std::string::npos) grid.h.lo = 1;  // "hi" means 1..hi for the stride
      if (!grid.h.empty() && grid.h.lo < 1) throw InvalidInput("grid h must be >= 1");
    } else if (key == "weighted") {
      if (value == "yes") {
        grid.weights = WeightMode::weighted;
      } else if (value == "no") {
        grid.weights = WeightMode::plain;
      } else if (value == "both") {
        grid.weights = WeightMode::both;
      } else {
        throw InvalidInput("grid weighted must be yes, no or both");
      }
    } else if (key == "seq") {
      if (value == "default") continue;
      const GridRanges defaults = default_grid();
      grid.params.clear();
      for (const auto& name : split(value, '+')) {
        auto it = std::find_if(defaults.params.begin(), defaults.params.end(),
                               [&](const NamedParams& p) { return p.label == name; });
        if (it == defaults.params.end()) throw InvalidInput("unknown grid sequence '" + name + "'");
        grid.params.push_back(*it);
      }
    } else {
      throw InvalidInput("unknown grid key '" + key + "'");
    }
  }
  return grid;
}

CliRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Exact Ledin and Brousseau power sums of Horadam sequences", "ledin"};
  app.require_subcommand(1);

  CliRequest request;
  std::string seq;
  std::string params;
  std::string format = "text";
  std::string route;
  std::string grid;
  std::string m = "0";
  std::string n = "0";
  std::string r = "0";
  std::string h = "1";
  std::string max_m = "5";

  auto add_sequence = [&](CLI::App* sub) {
    sub->add_option("--seq", seq, "fibonacci | lucas | pell | custom");
    sub->add_option("--params", params, "a,b,p,q as rational literals");
    sub->add_option("--r", r, "index shift r");
    sub->add_option("--format", format, "text | json | csv");
    sub->add_option("--route", route, "force a single evaluation route");
  };

  auto* sum = app.add_subcommand("sum", "evaluate sum_{k=1}^{n} [V_h^-k] k^m w_{hk+r}");
  sum->set_help_flag("--help", "print usage");  // frees -h for --h
  add_sequence(sum);
  sum->add_option("--m", m, "power m");
  sum->add_option("--n", n, "upper limit n");
  sum->add_option("--h", h, "index stride h");
  sum->add_flag("--weighted", request.weighted, "weight terms by V_h^-k");

  auto* form = app.add_subcommand("form", "print the Ledin form P1, P2, C for order m");
  add_sequence(form);
  form->add_option("--m", m, "power m");

  auto* table = app.add_subcommand("table", "print Ledin forms for m = 0..max-m");
  add_sequence(table);
  table->add_option("--max-m", max_m, "largest m");

  auto* verify = app.add_subcommand("verify", "check every route against brute force over a grid");
  verify->add_option("--grid", grid, "e.g. m=2,n=10,r=-3..3,h=1..2,seq=fibonacci+lucas,weighted=both");
  verify->add_option("--format", format, "text | json | csv");
  verify->add_flag("--serial", request.serial, "use the single-threaded reference verifier");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }

  if (app.got_subcommand(sum)) request.subcommand = Subcommand::sum;
  if (app.got_subcommand(form)) request.subcommand = Subcommand::form;
  if (app.got_subcommand(table)) request.subcommand = Subcommand::table;
  if (app.got_subcommand(verify)) request.subcommand = Subcommand::verify;

  if (format == "text") {
    request.format = OutputFormat::text;
  } else if (format == "json") {
    request.format = OutputFormat::json;
  } else if (format == "csv") {
    request.format = OutputFormat::csv;
  } else {
    throw InvalidInput("unknown format '" + format + "'");
  }

  auto non_negative = [](std::string_view text, const std::string& what) {
    const long value = parse_integer(text, what);
    if (value < 0) throw InvalidInput(what + " must be non-negative");
    return value;
  };
  request.m = static_cast<unsigned>(non_negative(m, "--m"));
  request.n = static_cast<unsigned long>(non_negative(n, "--n"));
  request.max_m = static_cast<unsigned>(non_negative(max_m, "--max-m"));
  request.r = parse_integer(r, "--r");
  const long stride = parse_integer(h, "--h");
  if (stride < 1) throw InvalidInput("--h must be a positive integer");
  request.h = static_cast<unsigned>(stride);

  if (!route.empty()) {
    request.route = parse_route(route);
    if (!request.route) throw InvalidInput("unknown route '" + route + "'");
  }

  if (seq.empty()) seq = params.empty() ? "fibonacci" : "custom";
  if (seq == "custom") {
    if (params.empty()) throw InvalidInput("--seq custom requires --params a,b,p,q");
    request.params = parse_params(params);
  } else {
    if (!params.empty()) throw InvalidInput("--params is only valid with --seq custom");
    request.params = sequence_params(seq);
  }
  request.sequence = seq;

  if (request.subcommand == Subcommand::verify) request.grid = parse_grid(grid);
  return request;
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  switch (request.subcommand) {
    case Subcommand::sum:
      return run_sum(request, out, err);
    case Subcommand::form:
      return run_form(request, out);
    case Subcommand::table:
      return run_table(request, out);
    case Subcommand::verify:
      return run_verify(request, out);
  }
  return exit_invalid;
}

namespace {

// Diagnostics must stay on one line.
std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_request(args), out, err);
  } catch (const CLI::CallForHelp&) {
    out << "usage: ledin {sum|form|table|verify} [options]\n"
           "  sum    --seq S | --params a,b,p,q  --m M --n N [--r R] [--h H] [--weighted] [--route R]\n"
           "  form   --seq S | --params a,b,p,q  --m M [--r R] [--route R]\n"
           "  table  --seq S | --params a,b,p,q  --max-m M [--r R] [--route R]\n"
           "  verify [--grid m=..,n=..,r=lo..hi,h=..,seq=a+b,weighted=yes|no|both] [--serial]\n"
           "  all: --format text|json|csv\n";
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
  }
  return exit_invalid;
}

}  // namespace ledin::cli
