#pragma once

#include <deque>
#include <string>

#include "ledin/scalar.hpp"

namespace ledin {

/// Seeds and coefficients of w_0 = a, w_1 = b, w_j = p w_{j-1} - q w_{j-2}.
/// p != 0 and q != 0 are enforced at construction.
class HoradamParams {
 public:
  HoradamParams(Scalar a, Scalar b, Scalar p, Scalar q);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& p() const { return p_; }
  const Scalar& q() const { return q_; }

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;

  /// Lexicographic on (a, b, p, q); used for cache keys and report order.
  friend bool operator<(const HoradamParams& lhs, const HoradamParams& rhs);

  /// "a,b,p,q" with each entry rendered by to_string.
  std::string to_string() const;

 private:
  Scalar a_, b_, p_, q_;
};

enum class SequenceKind {
  fibonacci,  // (0, 1; 1, -1)
  lucas,      // (2, 1; 1, -1)
  lucas_u,    // U_j(p, q) = w_j(0, 1; p, q)
  lucas_v,    // V_j(p, q) = w_j(2, p; p, q)
  u_small,    // u_j(q) = w_j(0, 1; 1, q)
  v_small,    // v_j(q) = w_j(2, 1; 1, q)
};

/// Parameters of a named sequence. p is ignored for fibonacci, lucas,
/// u_small and v_small; q is ignored for fibonacci and lucas.
/// Throws InvalidInput when the embedded p or q is zero.
HoradamParams named_sequence_params(SequenceKind kind, const Scalar& p = 1, const Scalar& q = -1);

inline HoradamParams fibonacci_params() { return named_sequence_params(SequenceKind::fibonacci); }
inline HoradamParams lucas_params() { return named_sequence_params(SequenceKind::lucas); }

/// Memoized terms of one Horadam sequence at every integer index.
///
/// The cache grows monotonically outward from 0 in both directions and
/// only ever appends, so references returned by term() remain valid for
/// the lifetime of the object. Not synchronized; confine an instance to
/// one thread.
class Sequence {
 public:
  explicit Sequence(HoradamParams params);

  const HoradamParams& params() const { return params_; }

  /// w_j for any integer j. Negative indices use
  /// w_{-n} = (p w_{-n+1} - w_{-n+2}) / q.
  const Scalar& term(long j);
  const Scalar& operator[](long j) { return term(j); }

  std::size_t cached_terms() const { return forward_.size() + backward_.size(); }

 private:
  HoradamParams params_;
  std::deque<Scalar> forward_;   // w_0, w_1, w_2, ...
  std::deque<Scalar> backward_;  // w_{-1}, w_{-2}, ...
};

/// The calling thread's shared cache for `params`.
Sequence& thread_sequence(const HoradamParams& params);

/// w_j(a, b; p, q), served from the calling thread's cache.
Scalar horadam_term(const HoradamParams& params, long j);

}  // namespace ledin
