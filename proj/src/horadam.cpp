#include "ledin/horadam.hpp"

#include <map>
#include <memory>

#include "ledin/errors.hpp"

namespace ledin {

HoradamParams::HoradamParams(Scalar a, Scalar b, Scalar p, Scalar q)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0) throw InvalidInput("p = 0: excluded by Horadam definition");
  if (q_ == 0) throw InvalidInput("q = 0: excluded by Horadam definition");
}

bool operator<(const HoradamParams& lhs, const HoradamParams& rhs) {
  if (int c = cmp(lhs.a_, rhs.a_); c != 0) return c < 0;
  if (int c = cmp(lhs.b_, rhs.b_); c != 0) return c < 0;
  if (int c = cmp(lhs.p_, rhs.p_); c != 0) return c < 0;
  return cmp(lhs.q_, rhs.q_) < 0;
}

std::string HoradamParams::to_string() const {
  return ledin::to_string(a_) + "," + ledin::to_string(b_) + "," + ledin::to_string(p_) + "," +
         ledin::to_string(q_);
}

HoradamParams named_sequence_params(SequenceKind kind, const Scalar& p, const Scalar& q) {
  switch (kind) {
    case SequenceKind::fibonacci:
      return {0, 1, 1, -1};
    case SequenceKind::lucas:
      return {2, 1, 1, -1};
    case SequenceKind::lucas_u:
      return {0, 1, p, q};
    case SequenceKind::lucas_v:
      return {2, p, p, q};
    case SequenceKind::u_small:
      return {0, 1, 1, q};
    case SequenceKind::v_small:
      return {2, 1, 1, q};
  }
  throw InvalidInput("unknown sequence kind");
}

Sequence::Sequence(HoradamParams params) : params_(std::move(params)) {
  forward_.push_back(params_.a());
  forward_.push_back(params_.b());
}

const Scalar& Sequence::term(long j) {
  if (j >= 0) {
    const auto index = static_cast<std::size_t>(j);
    while (forward_.size() <= index) {
      const std::size_t k = forward_.size();
      forward_.push_back(params_.p() * forward_[k - 1] - params_.q() * forward_[k - 2]);
    }
    return forward_[index];
  }
  const auto index = static_cast<std::size_t>(-(j + 1));  // w_{-1} at 0
  while (backward_.size() <= index) {
    const std::size_t k = backward_.size();
    // w_{-n} from its two right-hand neighbours
    const Scalar& right1 = k == 0 ? forward_[0] : backward_[k - 1];
    const Scalar& right2 = k == 0 ? forward_[1] : (k == 1 ? forward_[0] : backward_[k - 2]);
    backward_.push_back((params_.p() * right1 - right2) / params_.q());
  }
  return backward_[index];
}

Sequence& thread_sequence(const HoradamParams& params) {
  thread_local std::map<HoradamParams, std::unique_ptr<Sequence>> caches;
  auto it = caches.find(params);
  if (it == caches.end()) {
    it = caches.emplace(params, std::make_unique<Sequence>(params)).first;
  }
  return *it->second;
}

Scalar horadam_term(const HoradamParams& params, long j) { return thread_sequence(params).term(j); }

}  // namespace ledin
