#pragma once

#include "ledin/horadam.hpp"
#include "ledin/polynomial.hpp"

namespace ledin {

/// The pair of coefficient polynomials (P1, P2) of a Ledin form.
struct PolyPair {
  Polynomial p1;
  Polynomial p2;

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

/// C(m, r) and K(m, r): the Fibonacci and Lucas Ledin constants.
struct LedinConstants {
  Scalar c;
  Scalar k;

  friend bool operator==(const LedinConstants&, const LedinConstants&) = default;
};

/// sum_{k=1}^{n} k^m w_{k+r} = p1(n) w_{n+r} + p2(n) w_{n+r+1} + constant.
struct LedinForm {
  Polynomial p1;
  Polynomial p2;
  Scalar constant;
  long shift = 0;
  HoradamParams params = fibonacci_params();

  friend bool operator==(const LedinForm&, const LedinForm&) = default;
};

/// p1(n) w_{n+r} + p2(n) w_{n+r+1} + constant. Zero at n = 0 for every
/// correctly built form.
Scalar evaluate_ledin_form(const LedinForm& form, unsigned long n);

}  // namespace ledin
