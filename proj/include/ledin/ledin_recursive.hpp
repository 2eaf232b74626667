#pragma once

// Recursive Ledin scheme. Each quantity of order m is obtained from all
// lower orders through the Leibniz expansion of the generating quotient,
// so the whole ladder 0..m is built (and memoized per thread) on first use.

#include "ledin/ledin_form.hpp"

namespace ledin {

/// P1(m, n) and P2(m, n) for the Fibonacci/Lucas Ledin form:
///   P1(m) = (n+2)^m - sum_{j<m} C(m,j) (2^{m-j} + 1) P1(j)
///   P2(m) = (n+1)^m - sum_{j<m} C(m,j) (2^{m-j} + 1) P2(j)
PolyPair p_polys_recursive(unsigned m);

/// (C(m), K(m)) from
///   C(m) = -1 - sum_{j<m} C(m,j) (2^{m-j} + 1) C(j)
///   K(m) = -(2^{m+1} + 1) - sum_{j<m} C(m,j) (2^{m-j} + 1) K(j)
LedinConstants ck_constants_recursive(unsigned m);

/// (C(m, r), K(m, r)) from
///   C(m, r) = -2^m F_r - F_{r+1} - sum_{j<m} C(m,j) (2^{m-j} + 1) C(j, r)
/// and likewise with Lucas numbers for K.
LedinConstants ck_shifted_recursive(unsigned m, long r);

/// The Fibonacci (lucas = false) or Lucas Ledin form of order m and shift r,
/// assembled from p_polys_recursive and ck_shifted_recursive.
LedinForm fibonacci_ledin_recursive(unsigned m, long r, bool lucas);

/// Horadam Ledin form of order m and shift r:
///   (q-p+1) P1(m) = (n+2)^m q - sum_{j<m} C(m,j) (2^{m-j} q - p) P1(j)
///   (q-p+1) P2(m) = -(n+1)^m  - sum_{j<m} C(m,j) (2^{m-j} q - p) P2(j)
///   (q-p+1) C(m,r) = -2^m q w_r + w_{r+1} - sum_{j<m} C(m,j) (2^{m-j} q - p) C(j,r)
/// Throws DegenerateDenominator when q - p + 1 = 0.
LedinForm horadam_ledin_recursive(unsigned m, long r, const HoradamParams& params);

/// The Horadam polynomials alone; they depend on (p, q) only.
PolyPair horadam_polys_recursive(unsigned m, const Scalar& p, const Scalar& q);

/// The shifted Horadam constant re-derived from the polynomials at n = 0:
///   C(m, r) = -w_r P1(m, 0) - w_{r+1} P2(m, 0).
Scalar horadam_constant_from_polys(unsigned m, long r, const HoradamParams& params);

/// q - p + 1, the denominator shared by every Horadam Ledin-form route.
Scalar ledin_denominator(const HoradamParams& params);

/// Throws DegenerateDenominator when q - p + 1 = 0.
void require_ledin_denominator(const HoradamParams& params);

}  // namespace ledin
