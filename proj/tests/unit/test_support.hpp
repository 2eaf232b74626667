#pragma once

// Test-only helpers: a direct power-sum loop kept apart from the library's
// oracle module, and the parameter sets shared by several suites.

#include <vector>

#include "ledin/horadam.hpp"

namespace ledin::testing {

/// sum_{k=1}^{n} k^m w_{hk+r}, optionally times V_h^{-k}, by plain iteration.
inline Scalar direct_sum(const HoradamParams& params, unsigned m, unsigned long n, long r, unsigned h = 1,
                         bool weighted = false) {
  Sequence w(params);
  Scalar base = 1;
  if (weighted) base = Sequence(named_sequence_params(SequenceKind::lucas_v, params.p(), params.q())).term(h);
  Scalar total = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    Scalar term = w.term(static_cast<long>(h * k) + r);
    for (unsigned i = 0; i < m; ++i) term *= static_cast<long>(k);
    for (unsigned long i = 0; weighted && i < k; ++i) term /= base;
    total += term;
  }
  return total;
}

inline std::vector<HoradamParams> horadam_grid() {
  return {
      fibonacci_params(),
      lucas_params(),
      HoradamParams(0, 1, 2, -1),
      HoradamParams(0, 1, 1, -2),
      HoradamParams(Scalar(3, 2), -5, Scalar(7, 3), Scalar(2, 5)),
  };
}

}  // namespace ledin::testing
