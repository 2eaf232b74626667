#include "ledin/ledin_recursive.hpp"

#include <map>
#include <utility>
#include <vector>

#include "ledin/errors.hpp"

namespace ledin {

namespace {

// C(m, j) (2^{m-j} + 1)
Scalar fibonacci_weight(unsigned m, unsigned j) {
  return Scalar(binomial(m, j) * (pow(Integer(2), m - j) + 1));
}

// C(m, j) (2^{m-j} q - p)
Scalar horadam_weight(unsigned m, unsigned j, const Scalar& p, const Scalar& q) {
  return Scalar(binomial(m, j)) * (Scalar(pow(Integer(2), m - j)) * q - p);
}

template <class T, class Next>
const T& extend_to(std::vector<T>& ladder, unsigned m, Next next) {
  while (ladder.size() <= m) {
    T value = next(ladder, static_cast<unsigned>(ladder.size()));
    ladder.push_back(std::move(value));
  }
  return ladder[m];
}

struct ShiftKey {
  HoradamParams params;
  long r;

  friend bool operator<(const ShiftKey& lhs, const ShiftKey& rhs) {
    if (lhs.params < rhs.params) return true;
    if (rhs.params < lhs.params) return false;
    return lhs.r < rhs.r;
  }
};

}  // namespace

Scalar ledin_denominator(const HoradamParams& params) { return params.q() - params.p() + 1; }

void require_ledin_denominator(const HoradamParams& params) {
  if (ledin_denominator(params) == 0) {
    throw DegenerateDenominator("q - p + 1 = 0", "excluded by Horadam definition");
  }
}

PolyPair p_polys_recursive(unsigned m) {
  thread_local std::vector<PolyPair> ladder;
  return extend_to(ladder, m, [](const std::vector<PolyPair>& lower, unsigned order) {
    PolyPair next{Polynomial::shifted_power(2, order), Polynomial::shifted_power(1, order)};
    for (unsigned j = 0; j < order; ++j) {
      const Scalar weight = fibonacci_weight(order, j);
      next.p1 -= lower[j].p1 * weight;
      next.p2 -= lower[j].p2 * weight;
    }
    return next;
  });
}

LedinConstants ck_constants_recursive(unsigned m) {
  thread_local std::vector<LedinConstants> ladder;
  return extend_to(ladder, m, [](const std::vector<LedinConstants>& lower, unsigned order) {
    LedinConstants next{Scalar(-1), -Scalar(pow(Integer(2), order + 1) + 1)};
    for (unsigned j = 0; j < order; ++j) {
      const Scalar weight = fibonacci_weight(order, j);
      next.c -= weight * lower[j].c;
      next.k -= weight * lower[j].k;
    }
    return next;
  });
}

LedinConstants ck_shifted_recursive(unsigned m, long r) {
  thread_local std::map<long, std::vector<LedinConstants>> ladders;
  Sequence& fib = thread_sequence(fibonacci_params());
  Sequence& luc = thread_sequence(lucas_params());
  return extend_to(ladders[r], m, [&](const std::vector<LedinConstants>& lower, unsigned order) {
    const Scalar two_pow(pow(Integer(2), order));
    LedinConstants next{-two_pow * fib[r] - fib[r + 1], -two_pow * luc[r] - luc[r + 1]};
    for (unsigned j = 0; j < order; ++j) {
      const Scalar weight = fibonacci_weight(order, j);
      next.c -= weight * lower[j].c;
      next.k -= weight * lower[j].k;
    }
    return next;
  });
}

LedinForm fibonacci_ledin_recursive(unsigned m, long r, bool lucas) {
  PolyPair polys = p_polys_recursive(m);
  const LedinConstants constants = ck_shifted_recursive(m, r);
  return LedinForm{std::move(polys.p1), std::move(polys.p2), lucas ? constants.k : constants.c, r,
                   lucas ? lucas_params() : fibonacci_params()};
}

PolyPair horadam_polys_recursive(unsigned m, const Scalar& p, const Scalar& q) {
  const HoradamParams key(0, 1, p, q);
  require_ledin_denominator(key);
  thread_local std::map<HoradamParams, std::vector<PolyPair>> ladders;
  const Scalar denominator = ledin_denominator(key);
  return extend_to(ladders[key], m, [&](const std::vector<PolyPair>& lower, unsigned order) {
    PolyPair next{Polynomial::shifted_power(2, order) * q, Polynomial::shifted_power(1, order) * Scalar(-1)};
    for (unsigned j = 0; j < order; ++j) {
      const Scalar weight = horadam_weight(order, j, p, q);
      next.p1 -= lower[j].p1 * weight;
      next.p2 -= lower[j].p2 * weight;
    }
    next.p1 *= 1 / denominator;
    next.p2 *= 1 / denominator;
    return next;
  });
}

LedinForm horadam_ledin_recursive(unsigned m, long r, const HoradamParams& params) {
  require_ledin_denominator(params);
  PolyPair polys = horadam_polys_recursive(m, params.p(), params.q());

  thread_local std::map<ShiftKey, std::vector<Scalar>> ladders;
  Sequence& w = thread_sequence(params);
  const Scalar& p = params.p();
  const Scalar& q = params.q();
  const Scalar denominator = ledin_denominator(params);
  const Scalar constant =
      extend_to(ladders[ShiftKey{params, r}], m, [&](const std::vector<Scalar>& lower, unsigned order) {
        Scalar next = -Scalar(pow(Integer(2), order)) * q * w[r] + w[r + 1];
        for (unsigned j = 0; j < order; ++j) next -= horadam_weight(order, j, p, q) * lower[j];
        return Scalar(next / denominator);
      });
  return LedinForm{std::move(polys.p1), std::move(polys.p2), constant, r, params};
}

Scalar horadam_constant_from_polys(unsigned m, long r, const HoradamParams& params) {
  const PolyPair polys = horadam_polys_recursive(m, params.p(), params.q());
  Sequence& w = thread_sequence(params);
  return -w[r] * polys.p1(0) - w[r + 1] * polys.p2(0);
}

}  // namespace ledin
