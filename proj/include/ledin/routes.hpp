#pragma once

// Uniform access to every closed-form and Ledin-form evaluation of a
// SumSpec, so the verifier and the CLI can enumerate them.

#include <optional>
#include <string_view>
#include <vector>

#include "ledin/sum_spec.hpp"

namespace ledin {

enum class Route {
  fibonacci_recursive,  // P1, P2 by recursion with C(m,r) or K(m,r); F/L only, h = 1
  fibonacci_explicit,   // Eulerian P1, P2 with explicit C(m,r) or K(m,r); F/L only, h = 1
  theorem2,             // S(m,n,r) / T(m,n,r) closed form; F/L only, h = 1
  ledin_recursive,      // Horadam Ledin form by recursion; h = 1
  ledin_explicit,       // Horadam Ledin form from U-number Eulerian sums; h = 1
  ledin_restricted,     // p = 1 Ledin form with 1/q^{s+1}; h = 1
  omega,                // p = 1, h = 1 closed form (shift absorbed into the seeds)
  uv,                   // u_k(q) or v_k(q) sums; p = 1, h = 1, r = 0, seeds (0,1) or (2,1)
  ap,                   // arithmetic-progression closed form
  weighted_ap,          // V_h^{-k} weighted closed form
};

inline constexpr Route all_routes[] = {
    Route::fibonacci_recursive, Route::fibonacci_explicit, Route::theorem2, Route::ledin_recursive,
    Route::ledin_explicit,      Route::ledin_restricted,   Route::omega,    Route::uv,
    Route::ap,                  Route::weighted_ap,
};

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);

/// Whether the route's formula is stated for this shape of sum (weighting,
/// stride, sequence family). Guard denominators are not checked here.
bool route_applies(Route route, const SumSpec& spec);

/// Routes that apply to `spec`, in declaration order.
std::vector<Route> applicable_routes(const SumSpec& spec);

/// Result of one closed-form evaluation together with the denominators the
/// route divides by, all verified nonzero.
struct ClosedFormReport {
  Scalar value;
  Route route;
  std::vector<Scalar> guard_denominators;
};

/// Evaluates `route` on `spec`. Throws InvalidInput if the route does not
/// apply, and GuardViolation / DegenerateDenominator if a guard fails.
ClosedFormReport evaluate_route(Route route, const SumSpec& spec);

}  // namespace ledin
