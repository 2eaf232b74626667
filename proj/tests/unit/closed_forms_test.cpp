#include <gtest/gtest.h>

#include <random>

#include "ledin/closed_forms.hpp"
#include "ledin/errors.hpp"
#include "ledin/ledin_recursive.hpp"
#include "test_support.hpp"

namespace ledin {
namespace {

using testing::direct_sum;

SumSpec make_spec(unsigned m, unsigned long n, long r, unsigned h, HoradamParams params, bool weighted = false) {
  return SumSpec{m, n, r, h, std::move(params), weighted};
}

TEST(QPowerSumClosed, Examples) {
  EXPECT_EQ(q_power_sum_closed(2, 0, 3), 15);
  EXPECT_EQ(q_power_sum_closed(2, 1, 2), 10);
  EXPECT_EQ(q_power_sum_closed(3, 0, 0), 1);
}

TEST(QPowerSumClosed, MatchesDirectPowerSums) {
  for (const Scalar& x : {Scalar(2), Scalar(1, 2), Scalar(-3), Scalar(5, 7)}) {
    for (unsigned m = 0; m <= 8; ++m) {
      Scalar direct = 0;
      for (unsigned long n = 0; n <= 30; ++n) {
        Scalar term = pow(x, static_cast<long>(n));
        for (unsigned i = 0; i < m; ++i) term *= static_cast<long>(n);
        if (n == 0 && m == 0) term = 1;
        direct += term;
        EXPECT_EQ(q_power_sum_closed(x, m, n), direct) << to_string(x) << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(QPowerSumClosed, GuardsZeroAndOne) {
  EXPECT_THROW(q_power_sum_closed(0, 2, 3), GuardViolation);
  EXPECT_THROW(q_power_sum_closed(1, 2, 3), GuardViolation);
}

TEST(BrousseauClosed, Examples) {
  EXPECT_EQ(s_closed(0, 5, 0), 12);
  EXPECT_EQ(s_closed(1, 4, 0), 21);
  EXPECT_EQ(t_closed(0, 3, 0), 8);
}

TEST(BrousseauClosed, MatchesDirectSums) {
  for (unsigned m = 0; m <= 7; ++m) {
    for (long r = -10; r <= 10; ++r) {
      for (unsigned long n = 0; n <= 20; ++n) {
        EXPECT_EQ(s_closed(m, n, r), direct_sum(fibonacci_params(), m, n, r));
        EXPECT_EQ(t_closed(m, n, r), direct_sum(lucas_params(), m, n, r));
      }
    }
  }
}

TEST(PPolysExplicit, Examples) {
  EXPECT_EQ(p_polys_explicit(0), (PolyPair{Polynomial({1}), Polynomial({1})}));
  EXPECT_EQ(p_polys_explicit(1), (PolyPair{Polynomial({-1, 1}), Polynomial({-2, 1})}));
  for (unsigned m = 0; m <= 8; ++m) EXPECT_EQ(p_polys_explicit(m), p_polys_recursive(m)) << m;
}

TEST(LedinConstantsExplicit, Examples) {
  EXPECT_EQ(ledin_constants_explicit(0, 0), (LedinConstants{-1, -3}));
  EXPECT_EQ(ledin_constants_explicit(1, 0), (LedinConstants{2, 4}));
  EXPECT_EQ(ledin_constants_explicit(0, 2).c, -3);
  for (unsigned m = 0; m <= 8; ++m) {
    for (long r = -10; r <= 10; ++r) EXPECT_EQ(ledin_constants_explicit(m, r), ck_shifted_recursive(m, r));
  }
}

TEST(OmegaClosed, Examples) {
  EXPECT_EQ(omega_closed(0, 5, fibonacci_params()), 12);
  EXPECT_EQ(omega_closed(1, 3, named_sequence_params(SequenceKind::u_small, 1, -2)), 12);
  EXPECT_EQ(omega_closed(0, 0, HoradamParams(Scalar(3, 2), -5, 1, Scalar(2, 3))), 0);
}

TEST(OmegaClosed, RequiresUnitP) {
  EXPECT_THROW(omega_closed(1, 3, HoradamParams(0, 1, 2, -1)), GuardViolation);
}

TEST(OmegaClosed, MatchesDirectSums) {
  for (const Scalar& q : {Scalar(-1), Scalar(-2), Scalar(2, 3), Scalar(1, 4)}) {
    for (const HoradamParams& params : {HoradamParams(0, 1, 1, q), HoradamParams(2, 1, 1, q),
                                        HoradamParams(Scalar(3, 2), -5, 1, q)}) {
      for (unsigned m = 0; m <= 5; ++m) {
        for (unsigned long n = 0; n <= 20; ++n) {
          EXPECT_EQ(omega_closed(m, n, params), direct_sum(params, m, n, 0)) << params.to_string();
        }
      }
    }
  }
}

TEST(UvClosed, Examples) {
  EXPECT_EQ(uv_closed(0, 4, -1, LucasKind::u), 7);
  EXPECT_EQ(uv_closed(0, 3, -1, LucasKind::v), 8);
  EXPECT_EQ(uv_closed(1, 3, -2, LucasKind::u), 12);
}

TEST(UvClosed, AgreesWithOmega) {
  for (const Scalar& q : {Scalar(-1), Scalar(-2), Scalar(2, 3)}) {
    for (unsigned m = 0; m <= 5; ++m) {
      for (unsigned long n = 0; n <= 20; ++n) {
        EXPECT_EQ(uv_closed(m, n, q, LucasKind::u), omega_closed(m, n, HoradamParams(0, 1, 1, q)));
        EXPECT_EQ(uv_closed(m, n, q, LucasKind::v), omega_closed(m, n, HoradamParams(2, 1, 1, q)));
      }
    }
  }
}

TEST(WeightedApClosed, Examples) {
  EXPECT_EQ(weighted_ap_closed(make_spec(0, 2, 0, 2, fibonacci_params(), true)), Scalar(2, 3));
  EXPECT_EQ(weighted_ap_closed(make_spec(0, 0, 3, 2, lucas_params(), true)), 0);
  // p = 1, h = 1 gives V_1 = 1: the weighted sum is the plain one
  const HoradamParams jacobsthal_like(0, 1, 1, -2);
  EXPECT_EQ(weighted_ap_closed(make_spec(1, 3, 0, 1, jacobsthal_like, true)), omega_closed(1, 3, jacobsthal_like));
}

TEST(WeightedApClosed, GuardsVanishingWeightBase) {
  // V_2(2, 2) = p^2 - 2q = 0
  EXPECT_THROW(weighted_ap_closed(make_spec(1, 3, 0, 2, HoradamParams(0, 1, 2, 2), true)), GuardViolation);
}

TEST(ApSumClosed, Examples) {
  EXPECT_EQ(ap_sum_closed(make_spec(0, 3, 0, 2, fibonacci_params())), 12);
  EXPECT_EQ(ap_denominator(fibonacci_params(), 2), -1);
  EXPECT_EQ(ap_sum_closed(make_spec(1, 4, 0, 1, fibonacci_params())), 21);
  EXPECT_EQ(ap_sum_closed(make_spec(3, 0, -2, 3, lucas_params())), 0);
}

TEST(ApSumClosed, DegenerateDenominator) {
  // 1 - V_1 + q = 1 - p + q vanishes for p = q + 1
  EXPECT_THROW(ap_sum_closed(make_spec(1, 3, 0, 1, HoradamParams(0, 1, 3, 2))), DegenerateDenominator);
  // p^2 = 4q: V_h = 2 and q^h = 1 for (2, 1)
  for (unsigned h = 1; h <= 3; ++h) {
    EXPECT_THROW(ap_sum_closed(make_spec(0, 3, 0, h, HoradamParams(1, 1, 2, 1))), DegenerateDenominator);
  }
}

TEST(HoradamLedinExplicit, Examples) {
  const LedinForm zero = horadam_ledin_explicit(0, 0, fibonacci_params());
  EXPECT_EQ(zero.p1, Polynomial({1}));
  EXPECT_EQ(zero.p2, Polynomial({1}));
  EXPECT_EQ(zero.constant, -1);
  const LedinForm one = horadam_ledin_explicit(1, 0, fibonacci_params());
  EXPECT_EQ(one.p1, Polynomial({-1, 1}));
  EXPECT_EQ(one.p2, Polynomial({-2, 1}));
  EXPECT_EQ(one.constant, 2);
  const HoradamParams p_one(0, 1, 1, -2);
  EXPECT_EQ(horadam_ledin_explicit(1, 0, p_one), horadam_ledin_restricted(1, 0, p_one));
}

TEST(HoradamLedinExplicit, EqualsRecursiveForm) {
  for (const auto& params : testing::horadam_grid()) {
    for (unsigned m = 0; m <= 6; ++m) {
      for (long r = -6; r <= 6; ++r) {
        EXPECT_EQ(horadam_ledin_explicit(m, r, params), horadam_ledin_recursive(m, r, params))
            << params.to_string() << " m=" << m << " r=" << r;
      }
    }
  }
}

TEST(HoradamLedinExplicit, RestrictedAndGeneralCoincideAtUnitP) {
  for (const Scalar& q : {Scalar(-1), Scalar(-2), Scalar(2, 3)}) {
    for (const HoradamParams& params : {HoradamParams(0, 1, 1, q), HoradamParams(Scalar(-7, 2), 4, 1, q)}) {
      for (unsigned m = 0; m <= 6; ++m) {
        for (long r = -5; r <= 5; ++r) {
          EXPECT_EQ(horadam_ledin_restricted(m, r, params), horadam_ledin_explicit(m, r, params));
        }
      }
    }
  }
  EXPECT_THROW(horadam_ledin_restricted(1, 0, HoradamParams(0, 1, 2, -1)), GuardViolation);
  EXPECT_THROW(horadam_ledin_explicit(1, 0, HoradamParams(0, 1, 3, 2)), DegenerateDenominator);
}

TEST(ClosedForms, EmptySumIsZero) {
  for (const auto& params : testing::horadam_grid()) {
    for (unsigned m = 0; m <= 6; ++m) {
      for (long r = -8; r <= 8; ++r) {
        for (unsigned h = 1; h <= 3; ++h) {
          if (ap_denominator(params, h) != 0) EXPECT_EQ(ap_sum_closed(make_spec(m, 0, r, h, params)), 0);
          if (lucas_v(params, h) != 0) EXPECT_EQ(weighted_ap_closed(make_spec(m, 0, r, h, params, true)), 0);
        }
        EXPECT_EQ(evaluate_ledin_form(horadam_ledin_explicit(m, r, params), 0), 0);
      }
      EXPECT_EQ(s_closed(m, 0, 3), 0);
      EXPECT_EQ(t_closed(m, 0, -3), 0);
    }
  }
}

// Random rational parameters: every closed form must reproduce the direct
// sum exactly, or refuse with a guard error.
TEST(ClosedForms, RandomParametersProperty) {
  std::mt19937 rng(20221016);
  std::uniform_int_distribution<long> numerator(-9, 9);
  std::uniform_int_distribution<long> denominator(1, 6);
  auto rational = [&] { return Scalar(numerator(rng), denominator(rng)); };
  auto nonzero = [&] {
    Scalar x;
    do x = rational(); while (x == 0);
    x.canonicalize();
    return x;
  };
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = rational(), b = rational();
    a.canonicalize();
    b.canonicalize();
    const HoradamParams params(a, b, nonzero(), nonzero());
    std::uniform_int_distribution<unsigned> small(0, 4);
    std::uniform_int_distribution<long> shift(-5, 5);
    const unsigned m = small(rng);
    const unsigned h = 1 + small(rng) % 3;
    const long r = shift(rng);
    for (unsigned long n = 0; n <= 8; ++n) {
      const SumSpec plain = make_spec(m, n, r, h, params);
      const SumSpec weighted = make_spec(m, n, r, h, params, true);
      if (ap_denominator(params, h) != 0) EXPECT_EQ(ap_sum_closed(plain), direct_sum(params, m, n, r, h));
      if (lucas_v(params, h) != 0) {
        EXPECT_EQ(weighted_ap_closed(weighted), direct_sum(params, m, n, r, h, true));
      }
      if (ledin_denominator(params) != 0) {
        EXPECT_EQ(evaluate_ledin_form(horadam_ledin_explicit(m, r, params), n), direct_sum(params, m, n, r));
      }
    }
  }
}

}  // namespace
}  // namespace ledin
