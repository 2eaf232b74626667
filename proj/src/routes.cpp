#include "ledin/routes.hpp"

#include <string>

#include "ledin/closed_forms.hpp"
#include "ledin/errors.hpp"
#include "ledin/ledin_recursive.hpp"

namespace ledin {

namespace {

bool is_fibonacci(const HoradamParams& params) { return params == fibonacci_params(); }
bool is_lucas(const HoradamParams& params) { return params == lucas_params(); }

bool seeds_are(const HoradamParams& params, long a, long b) { return params.a() == a && params.b() == b; }

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::fibonacci_recursive: return "fibonacci_recursive";
    case Route::fibonacci_explicit: return "fibonacci_explicit";
    case Route::theorem2: return "theorem2";
    case Route::ledin_recursive: return "ledin_recursive";
    case Route::ledin_explicit: return "ledin_explicit";
    case Route::ledin_restricted: return "ledin_restricted";
    case Route::omega: return "omega";
    case Route::uv: return "uv";
    case Route::ap: return "ap";
    case Route::weighted_ap: return "weighted_ap";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route route : all_routes) {
    if (route_name(route) == name) return route;
  }
  return std::nullopt;
}

bool route_applies(Route route, const SumSpec& spec) {
  const auto& params = spec.params;
  const bool plain_unit_stride = !spec.weighted && spec.h == 1;
  switch (route) {
    case Route::fibonacci_recursive:
    case Route::fibonacci_explicit:
    case Route::theorem2:
      return plain_unit_stride && (is_fibonacci(params) || is_lucas(params));
    case Route::ledin_recursive:
    case Route::ledin_explicit:
      return plain_unit_stride;
    case Route::ledin_restricted:
    case Route::omega:
      return plain_unit_stride && params.p() == 1;
    case Route::uv:
      return plain_unit_stride && params.p() == 1 && spec.r == 0 &&
             (seeds_are(params, 0, 1) || seeds_are(params, 2, 1));
    case Route::ap:
      return !spec.weighted;
    case Route::weighted_ap:
      return spec.weighted;
  }
  return false;
}

std::vector<Route> applicable_routes(const SumSpec& spec) {
  std::vector<Route> routes;
  for (Route route : all_routes) {
    if (route_applies(route, spec)) routes.push_back(route);
  }
  return routes;
}

ClosedFormReport evaluate_route(Route route, const SumSpec& spec) {
  spec.validate();
  if (!route_applies(route, spec)) {
    throw InvalidInput("route " + std::string(route_name(route)) + " does not apply to " + spec.to_string());
  }
  const auto& params = spec.params;
  const bool lucas = is_lucas(params);
  ClosedFormReport report{0, route, {}};
  switch (route) {
    case Route::fibonacci_recursive:
      report.value = evaluate_ledin_form(fibonacci_ledin_recursive(spec.m, spec.r, lucas), spec.n);
      break;
    case Route::fibonacci_explicit: {
      PolyPair polys = p_polys_explicit(spec.m);
      const LedinConstants constants = ledin_constants_explicit(spec.m, spec.r);
      const LedinForm form{std::move(polys.p1), std::move(polys.p2), lucas ? constants.k : constants.c, spec.r,
                           params};
      report.value = evaluate_ledin_form(form, spec.n);
      break;
    }
    case Route::theorem2:
      report.value = lucas ? t_closed(spec.m, spec.n, spec.r) : s_closed(spec.m, spec.n, spec.r);
      break;
    case Route::ledin_recursive:
      report.value = evaluate_ledin_form(horadam_ledin_recursive(spec.m, spec.r, params), spec.n);
      report.guard_denominators.push_back(ledin_denominator(params));
      break;
    case Route::ledin_explicit:
      report.value = evaluate_ledin_form(horadam_ledin_explicit(spec.m, spec.r, params), spec.n);
      report.guard_denominators.push_back(ledin_denominator(params));
      break;
    case Route::ledin_restricted:
      report.value = evaluate_ledin_form(horadam_ledin_restricted(spec.m, spec.r, params), spec.n);
      report.guard_denominators.push_back(params.q());
      break;
    case Route::omega: {
      // sum k^m w*_{k+r} is the r = 0 sum of the sequence reseeded at (w*_r, w*_{r+1})
      Sequence& w = thread_sequence(params);
      const HoradamParams shifted(w[spec.r], w[spec.r + 1], 1, params.q());
      report.value = omega_closed(spec.m, spec.n, shifted);
      report.guard_denominators.push_back(params.q());
      break;
    }
    case Route::uv:
      report.value =
          uv_closed(spec.m, spec.n, params.q(), seeds_are(params, 0, 1) ? LucasKind::u : LucasKind::v);
      report.guard_denominators.push_back(params.q());
      break;
    case Route::ap:
      report.value = ap_sum_closed(spec);
      report.guard_denominators.push_back(ap_denominator(params, spec.h));
      break;
    case Route::weighted_ap:
      report.value = weighted_ap_closed(spec);
      report.guard_denominators.push_back(lucas_v(params, spec.h));
      report.guard_denominators.push_back(pow(params.q(), static_cast<long>(spec.h)));
      break;
  }
  return report;
}

}  // namespace ledin
