#include "ledin/sum_spec.hpp"

#include <tuple>

#include "ledin/errors.hpp"
#include "ledin/ledin_form.hpp"

namespace ledin {

void SumSpec::validate() const {
  if (h == 0) throw InvalidInput("h must be a positive integer");
}

std::string SumSpec::to_string() const {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
         " h=" + std::to_string(h) + " params=" + params.to_string() + (weighted ? " weighted" : "");
}

bool operator<(const SumSpec& lhs, const SumSpec& rhs) {
  if (lhs.params < rhs.params) return true;
  if (rhs.params < lhs.params) return false;
  return std::tie(lhs.weighted, lhs.h, lhs.m, lhs.r, lhs.n) < std::tie(rhs.weighted, rhs.h, rhs.m, rhs.r, rhs.n);
}

Scalar lucas_v(const HoradamParams& params, long h) {
  return horadam_term(named_sequence_params(SequenceKind::lucas_v, params.p(), params.q()), h);
}

Scalar evaluate_ledin_form(const LedinForm& form, unsigned long n) {
  Sequence& w = thread_sequence(form.params);
  const Scalar at(static_cast<long>(n));
  const long base = static_cast<long>(n) + form.shift;
  return form.p1(at) * w[base] + form.p2(at) * w[base + 1] + form.constant;
}

}  // namespace ledin
