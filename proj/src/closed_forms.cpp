#include "ledin/closed_forms.hpp"

#include "ledin/errors.hpp"
#include "ledin/eulerian.hpp"
#include "ledin/ledin_recursive.hpp"

namespace ledin {

namespace {

Scalar euler(unsigned i, unsigned j) { return Scalar(eulerian_row(i)[j]); }

Scalar choose(unsigned long n, unsigned long k) { return Scalar(binomial(n, k)); }

Scalar power_of(unsigned long n, unsigned e) { return pow(Scalar(static_cast<long>(n)), static_cast<long>(e)); }

Scalar delta0(unsigned m) { return m == 0 ? Scalar(1) : Scalar(0); }

// A_i(x) = sum_{j=0}^{i} A(i,j) x^j
Scalar eulerian_polynomial(unsigned i, const Scalar& x) {
  Scalar value = 0;
  Scalar x_pow = 1;
  for (unsigned j = 0; j <= i; ++j) {
    value += euler(i, j) * x_pow;
    x_pow *= x;
  }
  return value;
}

void require_p_one(const HoradamParams& params) {
  if (params.p() != 1) throw GuardViolation("p != 1", "restricted closed form needs p = 1");
}

// Shared body of the S(m,n,r) and T(m,n,r) closed forms over x = F or L.
Scalar brousseau_closed(Sequence& x, unsigned m, unsigned long n, long r) {
  const long nl = static_cast<long>(n);
  const long ml = static_cast<long>(m);
  Scalar sum = -delta0(m) * x[r] + power_of(n, m) * x[nl + r + 2];
  Scalar constant_part = 0;
  for (unsigned j = 0; j <= m; ++j) constant_part += euler(m, j) * x[j + ml + r + 1];
  sum += sign_power(ml + 1) * constant_part;
  for (unsigned s = 1; s <= m; ++s) {
    Scalar inner = 0;
    for (unsigned j = 1; j <= s; ++j) inner += euler(s, j) * x[j + nl + s + r + 1];
    sum -= sign_power(s + 1) * choose(m, s) * power_of(n, m - s) * inner;
  }
  return sum;
}

Scalar uv_body(Sequence& x, unsigned m, unsigned long n, const Scalar& q) {
  const long nl = static_cast<long>(n);
  const long ml = static_cast<long>(m);
  Scalar sum = -delta0(m) * x[0] - power_of(n, m) * x[nl + 2] / q;
  Scalar constant_part = 0;
  for (unsigned j = 0; j <= m; ++j) constant_part += euler(m, j) * x[j + ml + 1];
  sum += constant_part / pow(q, ml + 1);
  for (unsigned s = 1; s <= m; ++s) {
    Scalar inner = 0;
    for (unsigned j = 1; j <= s; ++j) inner += euler(s, j) * x[j + nl + s + 1];
    sum -= choose(m, s) * power_of(n, m - s) * inner / pow(q, static_cast<long>(s) + 1);
  }
  return sum;
}

}  // namespace

Scalar q_power_sum_closed(const Scalar& x, unsigned m, unsigned long n) {
  if (x == 0) throw GuardViolation("x = 0", "power-sum closed form needs x != 0");
  if (x == 1) throw GuardViolation("x = 1", "power-sum closed form needs x != 1");
  const Scalar one_minus = 1 - x;
  const Scalar x_n = pow(x, static_cast<long>(n));
  Scalar sum = -power_of(n, m) * x_n * x / one_minus;
  sum += eulerian_polynomial(m, x) / pow(one_minus, static_cast<long>(m) + 1);
  for (unsigned s = 1; s <= m; ++s) {
    sum -= x_n * choose(m, s) * power_of(n, m - s) * eulerian_polynomial(s, x) /
           pow(one_minus, static_cast<long>(s) + 1);
  }
  return sum;
}

Scalar s_closed(unsigned m, unsigned long n, long r) {
  return brousseau_closed(thread_sequence(fibonacci_params()), m, n, r);
}

Scalar t_closed(unsigned m, unsigned long n, long r) {
  return brousseau_closed(thread_sequence(lucas_params()), m, n, r);
}

PolyPair p_polys_explicit(unsigned m) {
  Sequence& fib = thread_sequence(fibonacci_params());
  Polynomial p1 = Polynomial::monomial(1, m);
  Polynomial p2 = Polynomial::monomial(1, m);
  for (unsigned s = 1; s <= m; ++s) {
    Scalar inner1 = 0;
    Scalar inner2 = 0;
    for (unsigned j = 1; j <= s; ++j) {
      inner1 += euler(s, j) * fib[j + s];
      inner2 += euler(s, j) * fib[j + s + 1];
    }
    const Scalar outer = sign_power(s) * choose(m, s);
    p1.add_term(outer * inner1, m - s);
    p2.add_term(outer * inner2, m - s);
  }
  return {std::move(p1), std::move(p2)};
}

LedinConstants ledin_constants_explicit(unsigned m, long r) {
  Sequence& fib = thread_sequence(fibonacci_params());
  Sequence& luc = thread_sequence(lucas_params());
  const long ml = static_cast<long>(m);
  Scalar c_sum = 0;
  Scalar k_sum = 0;
  for (unsigned j = 0; j <= m; ++j) {
    c_sum += euler(m, j) * fib[j + ml + r + 1];
    k_sum += euler(m, j) * luc[j + ml + r + 1];
  }
  const int sign = sign_power(ml + 1);
  return {-delta0(m) * fib[r] + sign * c_sum, -delta0(m) * luc[r] + sign * k_sum};
}

Scalar omega_closed(unsigned m, unsigned long n, const HoradamParams& params) {
  require_p_one(params);
  const Scalar& q = params.q();
  Sequence& w = thread_sequence(params);
  Sequence& u = thread_sequence(named_sequence_params(SequenceKind::u_small, 1, q));
  Sequence& v = thread_sequence(named_sequence_params(SequenceKind::v_small, 1, q));
  const long nl = static_cast<long>(n);
  const long ml = static_cast<long>(m);

  Scalar sum = -delta0(m) * params.a() - power_of(n, m) * w[nl + 2] / q;

  Scalar plain = 0;    // sum_j A(m,j) w*_j
  Scalar twisted = 0;  // sum_j A(m,j) (w*_{j+1} - q w*_{j-1})
  for (unsigned j = 0; j <= m; ++j) {
    const long jl = static_cast<long>(j);
    plain += euler(m, j) * w[jl];
    twisted += euler(m, j) * (w[jl + 1] - q * w[jl - 1]);
  }
  const Scalar head = 2 * pow(q, ml + 1);
  sum += v[ml + 1] / head * plain + u[ml + 1] / head * twisted;

  for (unsigned s = 1; s <= m; ++s) {
    const long sl = static_cast<long>(s);
    Scalar inner_plain = 0;
    Scalar inner_twisted = 0;
    for (unsigned j = 1; j <= s; ++j) {
      const long jl = static_cast<long>(j);
      inner_plain += euler(s, j) * w[jl];
      inner_twisted += euler(s, j) * (w[jl + 1] - q * w[jl - 1]);
    }
    const Scalar outer = power_of(n, m - s) * choose(m, s) / (2 * pow(q, sl + 1));
    sum -= outer * v[nl + sl + 1] * inner_plain;
    sum -= outer * u[nl + sl + 1] * inner_twisted;
  }
  return sum;
}

Scalar uv_closed(unsigned m, unsigned long n, const Scalar& q, LucasKind kind) {
  const auto seq_kind = kind == LucasKind::u ? SequenceKind::u_small : SequenceKind::v_small;
  return uv_body(thread_sequence(named_sequence_params(seq_kind, 1, q)), m, n, q);
}

Scalar weighted_ap_closed(const SumSpec& spec) {
  spec.validate();
  const auto& params = spec.params;
  const Scalar v_h = lucas_v(params, spec.h);
  if (v_h == 0) throw GuardViolation("V_h = 0", "weight V_h^-k undefined");
  Sequence& w = thread_sequence(params);
  const long h = spec.h;
  const long r = spec.r;
  const long nl = static_cast<long>(spec.n);
  const long ml = static_cast<long>(spec.m);
  const unsigned m = spec.m;
  const Scalar q_h = pow(params.q(), h);

  Scalar sum = -w[r] * delta0(m) - power_of(spec.n, m) * w[h * (nl + 2) + r] / (q_h * pow(v_h, nl));

  Scalar constant_part = 0;
  for (unsigned j = 0; j <= m; ++j) {
    const long jl = static_cast<long>(j);
    constant_part += euler(m, j) * w[h * (jl + ml + 1) + r] / pow(v_h, jl);
  }
  sum += pow(v_h / q_h, ml + 1) * constant_part;

  for (unsigned s = 1; s <= m; ++s) {
    const long sl = static_cast<long>(s);
    Scalar inner = 0;
    for (unsigned j = 1; j <= s; ++j) {
      const long jl = static_cast<long>(j);
      inner += euler(s, j) * w[h * (jl + nl + sl + 1) + r] / pow(v_h, jl + nl - sl - 1);
    }
    sum -= choose(m, s) * power_of(spec.n, m - s) / pow(params.q(), h * (sl + 1)) * inner;
  }
  return sum;
}

Scalar ap_denominator(const HoradamParams& params, unsigned h) {
  return 1 - lucas_v(params, h) + pow(params.q(), static_cast<long>(h));
}

Scalar ap_sum_closed(const SumSpec& spec) {
  spec.validate();
  const auto& params = spec.params;
  const Scalar denominator = ap_denominator(params, spec.h);
  if (denominator == 0) {
    throw DegenerateDenominator("1 - V_h + q^h = 0", "arithmetic-progression closed form undefined");
  }
  Sequence& w = thread_sequence(params);
  const long h = spec.h;
  const long r = spec.r;
  const long nl = static_cast<long>(spec.n);
  const unsigned m = spec.m;
  const Scalar q_h = pow(params.q(), h);

  Scalar sum = -delta0(m) * w[r] - power_of(spec.n, m) * (w[h * (nl + 1) + r] - q_h * w[h * nl + r]) / denominator;

  // sum_{c=0}^{s+1} (-1)^c C(s+1,c) q^{hc} sum_{j=0}^{s} A(s,j) w_{h(j-c+offset)+r}
  auto binomial_block = [&](unsigned s, long offset) {
    Scalar block = 0;
    Scalar q_hc = 1;
    for (unsigned c = 0; c <= s + 1; ++c) {
      Scalar inner = 0;
      for (unsigned j = 0; j <= s; ++j) {
        inner += euler(s, j) * w[h * (static_cast<long>(j) - static_cast<long>(c) + offset) + r];
      }
      block += sign_power(c) * choose(s + 1, c) * q_hc * inner;
      q_hc *= q_h;
    }
    return block;
  };

  sum += binomial_block(m, 0) / pow(denominator, static_cast<long>(m) + 1);
  for (unsigned s = 1; s <= m; ++s) {
    sum -= choose(m, s) * power_of(spec.n, m - s) / pow(denominator, static_cast<long>(s) + 1) *
           binomial_block(s, nl);
  }
  return sum;
}

LedinForm horadam_ledin_explicit(unsigned m, long r, const HoradamParams& params) {
  const Scalar& p = params.p();
  const Scalar& q = params.q();
  const Scalar denominator = 1 - p + q;
  if (denominator == 0) throw DegenerateDenominator("q - p + 1 = 0", "excluded by Horadam definition");
  Sequence& w = thread_sequence(params);
  Sequence& U = thread_sequence(named_sequence_params(SequenceKind::lucas_u, p, q));

  // sum_{c=0}^{s+1} (-1)^c C(s+1,c) q^c sum_{j=0}^{s} A(s,j) x_{j-c+offset}
  auto binomial_block = [&](Sequence& x, unsigned s, long offset) {
    Scalar block = 0;
    Scalar q_c = 1;
    for (unsigned c = 0; c <= s + 1; ++c) {
      Scalar inner = 0;
      for (unsigned j = 0; j <= s; ++j) {
        inner += euler(s, j) * x[static_cast<long>(j) - static_cast<long>(c) + offset];
      }
      block += sign_power(c) * choose(s + 1, c) * q_c * inner;
      q_c *= q;
    }
    return block;
  };

  Polynomial p1 = Polynomial::monomial(q / denominator, m);
  Polynomial p2 = Polynomial::monomial(-1 / denominator, m);
  for (unsigned s = 1; s <= m; ++s) {
    const Scalar outer = choose(m, s) / pow(denominator, static_cast<long>(s) + 1);
    p1.add_term(q * outer * binomial_block(U, s, -1), m - s);
    p2.add_term(-outer * binomial_block(U, s, 0), m - s);
  }
  const Scalar constant =
      -w[r] * delta0(m) + binomial_block(w, m, r) / pow(denominator, static_cast<long>(m) + 1);
  return LedinForm{std::move(p1), std::move(p2), constant, r, params};
}

LedinForm horadam_ledin_restricted(unsigned m, long r, const HoradamParams& params) {
  require_p_one(params);
  const Scalar& q = params.q();
  Sequence& w = thread_sequence(params);
  Sequence& u = thread_sequence(named_sequence_params(SequenceKind::u_small, 1, q));
  const long ml = static_cast<long>(m);

  Polynomial p1 = Polynomial::monomial(1, m);
  Polynomial p2 = Polynomial::monomial(-1 / q, m);
  for (unsigned s = 1; s <= m; ++s) {
    const long sl = static_cast<long>(s);
    Scalar inner1 = 0;
    Scalar inner2 = 0;
    for (unsigned j = 1; j <= s; ++j) {
      inner1 += euler(s, j) * u[static_cast<long>(j) + sl];
      inner2 += euler(s, j) * u[static_cast<long>(j) + sl + 1];
    }
    const Scalar outer = choose(m, s) / pow(q, sl + 1);
    p1.add_term(q * outer * inner1, m - s);
    p2.add_term(-outer * inner2, m - s);
  }
  Scalar constant_part = 0;
  for (unsigned j = 0; j <= m; ++j) constant_part += euler(m, j) * w[static_cast<long>(j) + ml + 1 + r];
  const Scalar constant = -w[r] * delta0(m) + constant_part / pow(q, ml + 1);
  return LedinForm{std::move(p1), std::move(p2), constant, r, params};
}

}  // namespace ledin
