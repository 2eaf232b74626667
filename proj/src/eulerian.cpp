#include "ledin/eulerian.hpp"

namespace ledin {

Integer eulerian(unsigned i, unsigned j) {
  Integer sum = 0;
  for (unsigned t = 0; t <= j; ++t) {
    // 0^0 = 1 falls out of pow's empty product
    Integer term = binomial(i + 1, t) * pow(Integer(j - t), i);
    if (t % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

const std::vector<Integer>& EulerianTriangle::row(unsigned i) {
  while (rows_.size() <= i) {
    const auto next = static_cast<unsigned>(rows_.size());
    std::vector<Integer> entries;
    entries.reserve(next + 1);
    for (unsigned j = 0; j <= next; ++j) entries.push_back(eulerian(next, j));
    rows_.push_back(std::move(entries));
  }
  return rows_[i];
}

const std::vector<Integer>& eulerian_row(unsigned i) {
  thread_local EulerianTriangle triangle;
  return triangle.row(i);
}

}  // namespace ledin
