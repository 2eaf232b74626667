#include "ledin/report.hpp"

#include "json.hpp"

#include "ledin/errors.hpp"

namespace ledin {

using nlohmann::json;

namespace {

Scalar scalar_from(const json& value) { return parse_scalar(value.get<std::string>()); }

json spec_to_json(const SumSpec& spec) {
  const auto& p = spec.params;
  return json{{"m", spec.m},
              {"n", spec.n},
              {"r", spec.r},
              {"h", spec.h},
              {"weighted", spec.weighted},
              {"params", json::array({to_string(p.a()), to_string(p.b()), to_string(p.p()), to_string(p.q())})}};
}

SumSpec spec_from_json(const json& j) {
  const auto& p = j.at("params");
  if (!p.is_array() || p.size() != 4) throw InvalidInput("params must be an array of four rationals");
  SumSpec spec;
  spec.m = j.at("m").get<unsigned>();
  spec.n = j.at("n").get<unsigned long>();
  spec.r = j.at("r").get<long>();
  spec.h = j.at("h").get<unsigned>();
  spec.weighted = j.at("weighted").get<bool>();
  spec.params = HoradamParams(scalar_from(p[0]), scalar_from(p[1]), scalar_from(p[2]), scalar_from(p[3]));
  return spec;
}

template <class F>
auto guarded_parse(std::string_view text, F body) {
  try {
    return body(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string serialize(const SumReport& report) {
  json routes = json::object();
  for (const auto& [name, value] : report.routes) routes[name] = to_string(value);
  json guards = json::array();
  for (const auto& g : report.guards) guards.push_back(to_string(g));
  return json{{"value", to_string(report.value)}, {"routes", routes}, {"guards", guards}}.dump();
}

SumReport parse_sum_report(std::string_view json_text) {
  return guarded_parse(json_text, [](const json& j) {
    SumReport report;
    report.value = scalar_from(j.at("value"));
    for (const auto& [name, value] : j.at("routes").items()) report.routes.emplace(name, scalar_from(value));
    for (const auto& g : j.at("guards")) report.guards.push_back(scalar_from(g));
    return report;
  });
}

std::string serialize(const VerificationReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back(json{{"spec", spec_to_json(m.spec)},
                              {"route", std::string(route_name(m.route))},
                              {"expected", to_string(m.expected)},
                              {"got", to_string(m.got)}});
  }
  return json{{"status", report.passed() ? "PASS" : "FAIL"},
              {"grid", report.grid_description},
              {"cases_run", report.cases_run},
              {"comparisons", report.comparisons},
              {"guard_skips", report.guard_skips},
              {"wall_time", report.wall_time},
              {"mismatches", mismatches}}
      .dump();
}

VerificationReport parse_verification_report(std::string_view json_text) {
  return guarded_parse(json_text, [](const json& j) {
    VerificationReport report;
    report.grid_description = j.at("grid").get<std::string>();
    report.cases_run = j.at("cases_run").get<std::uint64_t>();
    report.comparisons = j.at("comparisons").get<std::uint64_t>();
    report.guard_skips = j.at("guard_skips").get<std::uint64_t>();
    report.wall_time = j.at("wall_time").get<double>();
    for (const auto& m : j.at("mismatches")) {
      const auto route = parse_route(m.at("route").get<std::string>());
      if (!route) throw InvalidInput("unknown route in report");
      report.mismatches.push_back({spec_from_json(m.at("spec")), *route, scalar_from(m.at("expected")),
                                   scalar_from(m.at("got"))});
    }
    const bool claims_pass = j.at("status").get<std::string>() == "PASS";
    if (claims_pass != report.passed()) throw InvalidInput("report status disagrees with its mismatch list");
    return report;
  });
}

}  // namespace ledin
