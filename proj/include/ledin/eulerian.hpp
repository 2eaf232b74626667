#pragma once

#include <deque>
#include <vector>

#include "ledin/scalar.hpp"

namespace ledin {

/// Eulerian number A(i, j) from the alternating binomial sum
///   A(i, j) = sum_{t=0}^{j} (-1)^t C(i+1, t) (j - t)^i,   0^0 = 1.
/// A(0, 0) = 1, A(i, 0) = 0 for i >= 1, and A(i, j) = 0 for j > i.
Integer eulerian(unsigned i, unsigned j);

/// [A(i, 0), ..., A(i, i)]. Rows are memoized per thread; the returned
/// reference stays valid for the lifetime of the calling thread.
const std::vector<Integer>& eulerian_row(unsigned i);

/// Append-only row cache. References to rows stay valid as the triangle
/// grows. Not synchronized: use one instance per thread (the free function
/// eulerian_row does exactly that).
class EulerianTriangle {
 public:
  const std::vector<Integer>& row(unsigned i);
  std::size_t cached_rows() const { return rows_.size(); }

 private:
  std::deque<std::vector<Integer>> rows_;
};

}  // namespace ledin
