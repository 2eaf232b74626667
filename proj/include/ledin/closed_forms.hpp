#pragma once

// Eulerian-number closed forms. Each function transcribes one displayed
// identity term by term (same index ranges, same delta_{m,0} corrections)
// so that any disagreement with the brute-force oracle points at a single
// formula. Sequence terms at negative indices come from the backward
// recurrence.

#include "ledin/ledin_form.hpp"
#include "ledin/sum_spec.hpp"

namespace ledin {

/// sum_{k=0}^{n} k^m x^k (0^0 = 1) by the Hsu-Tan formula
///   -n^m x^{n+1}/(1-x) + A_m(x)/(1-x)^{m+1}
///     - sum_{s=1}^{m} x^n C(m,s) n^{m-s} A_s(x)/(1-x)^{s+1},
/// A_i(x) = sum_j A(i,j) x^j. Throws GuardViolation for x in {0, 1}.
Scalar q_power_sum_closed(const Scalar& x, unsigned m, unsigned long n);

/// sum_{k=1}^{n} k^m F_{k+r} in Eulerian closed form.
Scalar s_closed(unsigned m, unsigned long n, long r);

/// sum_{k=1}^{n} k^m L_{k+r} in Eulerian closed form.
Scalar t_closed(unsigned m, unsigned long n, long r);

/// P1, P2 of the Fibonacci/Lucas Ledin form as explicit Eulerian sums:
///   P1 = n^m + sum_{s=1}^{m} (-1)^s C(m,s) n^{m-s} sum_{j=1}^{s} A(s,j) F_{j+s}
/// and F_{j+s+1} in place of F_{j+s} for P2.
PolyPair p_polys_explicit(unsigned m);

/// C(m, r) = -delta_{m,0} F_r + (-1)^{m+1} sum_{j=0}^{m} A(m,j) F_{j+m+r+1},
/// K(m, r) the same with Lucas numbers.
LedinConstants ledin_constants_explicit(unsigned m, long r);

/// sum_{k=1}^{n} k^m w*_k for a p = 1 sequence w*(a, b; q), written with
/// u_j(q), v_j(q) and powers of q. Throws GuardViolation when p != 1.
Scalar omega_closed(unsigned m, unsigned long n, const HoradamParams& params);

enum class LucasKind { u, v };

/// sum_{k=1}^{n} k^m u_k(q) (or v_k(q)) with 1/q^{s+1} Eulerian sums.
/// Throws InvalidInput when q = 0.
Scalar uv_closed(unsigned m, unsigned long n, const Scalar& q, LucasKind kind);

/// sum_{k=1}^{n} V_h^{-k} k^m w_{hk+r}. spec.weighted is ignored.
/// Throws GuardViolation when V_h = 0.
Scalar weighted_ap_closed(const SumSpec& spec);

/// sum_{k=1}^{n} k^m w_{hk+r} with denominator 1 - V_h + q^h.
/// spec.weighted is ignored. Throws DegenerateDenominator when
/// 1 - V_h + q^h = 0.
Scalar ap_sum_closed(const SumSpec& spec);

/// 1 - V_h + q^h.
Scalar ap_denominator(const HoradamParams& params, unsigned h);

/// Horadam Ledin form built from U_j(p, q) Eulerian sums with
/// (1 - p + q)^{s+1} denominators, and the full-sequence Ledin constant.
/// Throws DegenerateDenominator when 1 - p + q = 0.
LedinForm horadam_ledin_explicit(unsigned m, long r, const HoradamParams& params);

/// The p = 1 Ledin form written with u_j(q) and 1/q^{s+1}.
/// Throws GuardViolation when p != 1.
LedinForm horadam_ledin_restricted(unsigned m, long r, const HoradamParams& params);

}  // namespace ledin
