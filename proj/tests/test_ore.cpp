#include <gtest/gtest.h>

#include "froblab/ore.hpp"
#include "froblab/rng.hpp"

using namespace froblab;

namespace {

SkewPoly F(const RingPtr& ring, i64 k = 1) { return SkewPoly::f_power(ring, k); }

TEST(LeftWitness, PaperFormulaOnFx) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  auto w = left_ore_witness(x, F(ring));
  EXPECT_EQ(w.r_tilde, F(ring));
  EXPECT_EQ(w.s_tilde, ring->mul(x, x));
  EXPECT_EQ(F(ring) * SkewPoly::constant(x), SkewPoly::constant(w.s_tilde) * F(ring));
}

TEST(LeftWitness, ConstantR) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  RingElem c = ring->from_int(1);
  auto w = left_ore_witness(x, SkewPoly::constant(c));
  EXPECT_EQ(w.r_tilde, SkewPoly::constant(c));
  EXPECT_EQ(w.s_tilde, x);
}

TEST(LeftWitness, DegreeTwoOverF3x) {
  auto ring = make_poly_ring(3);
  RingElem x = *ring->symbol_elem('x');
  SkewPoly r = SkewPoly::term(x, 2);  // x F^2
  auto w = left_ore_witness(x, r);
  // rho_2 = x * x^{9-9} = x, s~ = x^9
  EXPECT_EQ(w.r_tilde, r);
  EXPECT_EQ(w.s_tilde, ring->pow(x, 9));
}

TEST(RightWitness, PaperFormulaOnFx) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  auto w = right_ore_witness(x, F(ring));
  EXPECT_EQ(w.r_tilde, SkewPoly::term(x, 1));  // xF
  EXPECT_EQ(w.s_tilde, x);
  EXPECT_EQ(SkewPoly::constant(x) * w.r_tilde, F(ring) * SkewPoly::constant(x));
}

TEST(RightWitness, ConstantR) {
  auto ring = make_poly_ring(3);
  RingElem x = *ring->symbol_elem('x');
  SkewPoly r = SkewPoly::constant(ring->from_int(2));
  auto w = right_ore_witness(x, r);
  EXPECT_EQ(w.r_tilde, r);
  EXPECT_EQ(w.s_tilde, x);
}

TEST(RightWitness, FPlusOne) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  SkewPoly r = F(ring) + SkewPoly::one(ring);
  auto w = right_ore_witness(x, r);
  EXPECT_EQ(w.r_tilde, SkewPoly::term(x, 1) + SkewPoly::one(ring));
}

TEST(Witnesses, RandomIdentitiesBothSides) {
  Rng rng(101);
  std::vector<RingPtr> rings = {make_poly_ring(2), make_poly_ring(3), make_gf(2, 2),
                                make_ratfunc(2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 50; ++i) {
      RingElem s = random_nonzero(rng, ring, 2);
      SkewPoly r = random_skew(rng, ring, 4, 1);
      auto lw = left_ore_witness(s, r);
      EXPECT_EQ(lw.r_tilde * SkewPoly::constant(s), SkewPoly::constant(lw.s_tilde) * r);
      auto rw = right_ore_witness(s, r);
      EXPECT_EQ(SkewPoly::constant(s) * rw.r_tilde, r * SkewPoly::constant(rw.s_tilde));
    }
  }
}

TEST(Witnesses, ZeroDenominatorRejected) {
  auto ring = make_poly_ring(2);
  try {
    left_ore_witness(ring->zero(), F(ring));
    FAIL() << "expected ZeroDenominator";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::zero_denominator);
  }
}

TEST(Localization, FOverX) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  FqPoly xp = x.as_poly();
  auto loc = localization_normal_form(F(ring), xp, xp);
  // F x^{-1} = (1/x^2) F
  ASSERT_EQ(loc.value.coeffs().size(), 1u);
  RingElem c1 = loc.value.coeff(1);
  EXPECT_TRUE(c1.as_ratfunc().num.is_one());
  EXPECT_EQ(c1.as_ratfunc().den, xp * xp);
}

TEST(Localization, TrivialDenominatorIsInclusion) {
  Rng rng(7);
  auto ring = make_poly_ring(2);
  FqPoly one = FqPoly::one(ring->coeff_spec());
  FqPoly f = FqPoly::x(ring->coeff_spec());
  for (int i = 0; i < 20; ++i) {
    SkewPoly n = random_skew(rng, ring, 3, 2);
    auto loc = localization_normal_form(n, one, f);
    for (const auto& [d, c] : n.coeffs()) {
      EXPECT_EQ(loc.value.coeff(d).as_ratfunc().num, c.as_poly());
      EXPECT_TRUE(loc.value.coeff(d).as_ratfunc().den.is_one());
    }
  }
}

TEST(Localization, CancellationRoundTrip) {
  Rng rng(13);
  auto ring = make_poly_ring(2);
  FqPoly xp = FqPoly::x(ring->coeff_spec());
  for (int i = 0; i < 20; ++i) {
    SkewPoly n = random_skew(rng, ring, 3, 2);
    FqPoly den = xp * xp;
    SkewPoly nd = n * SkewPoly::constant(RingElem(ring, den));
    auto loc = localization_normal_form(nd, den, xp);
    auto expect = localization_normal_form(n, FqPoly::one(ring->coeff_spec()), xp);
    EXPECT_EQ(loc.value, expect.value);
  }
}

TEST(Localization, PairProductIsMultiplicative) {
  Rng rng(19);
  auto ring = make_poly_ring(2);
  FqPoly xp = FqPoly::x(ring->coeff_spec());
  for (int i = 0; i < 40; ++i) {
    SkewPoly na = random_skew(rng, ring, 2, 1);
    SkewPoly nb = random_skew(rng, ring, 2, 1);
    i64 ka = rng.below(3), kb = rng.below(3);
    FqPoly da = xp.pow(ka), db = xp.pow(kb);
    auto [np, dp] = localized_pair_product(na, da, nb, db);
    SkewPoly lhs = localization_normal_form(np, dp, xp).value;
    SkewPoly rhs = localization_normal_form(na, da, xp).value *
                   localization_normal_form(nb, db, xp).value;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Localization, RejectsDenominatorOutsideS) {
  auto ring = make_poly_ring(2);
  auto spec = ring->coeff_spec();
  FqPoly xp = FqPoly::x(spec);
  FqPoly xp1 = xp + FqPoly::one(spec);
  try {
    localization_normal_form(F(ring), xp1, xp);
    FAIL() << "expected DenominatorNotInS";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::denominator_not_in_s);
  }
}

TEST(SkewFractions, FTimesItsInverse) {
  auto ring = make_gf(2, 1);
  SkewFraction f = SkewFraction::from_poly(F(ring));
  EXPECT_TRUE((f * f.inv()).is_one());
}

TEST(SkewFractions, CharTwoAddition) {
  auto ring = make_gf(2, 1);
  SkewFraction invf = SkewFraction::of(SkewPoly::one(ring), F(ring));
  EXPECT_TRUE((invf + invf).is_zero());
}

TEST(SkewFractions, InverseAgainstFPlusOneOverF4) {
  auto ring = make_gf(2, 2);
  SkewPoly fp1 = F(ring) + SkewPoly::one(ring);
  SkewFraction a = SkewFraction::of(SkewPoly::one(ring), fp1);
  SkewFraction b = SkewFraction::from_poly(fp1);
  EXPECT_TRUE((a * b).is_one());
  EXPECT_TRUE((b * a).is_one());
}

TEST(SkewFractions, FieldAxiomsOnRandomTriples) {
  Rng rng(211);
  std::vector<RingPtr> rings = {make_gf(2, 1), make_gf(2, 2), make_gf(3, 2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 25; ++i) {
      auto rand_frac = [&]() {
        SkewPoly n = random_skew(rng, ring, 2);
        SkewPoly d = random_skew_nonzero(rng, ring, 2);
        return SkewFraction::of(n, d);
      };
      SkewFraction x = rand_frac(), y = rand_frac(), z = rand_frac();
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
      if (!x.is_zero()) {
        EXPECT_TRUE((x * x.inv()).is_one());
        EXPECT_TRUE((x.inv() * x).is_one());
      }
      EXPECT_TRUE((x - x).is_zero());
    }
  }
}

TEST(SkewFractions, LeftFractionDisplay) {
  Rng rng(223);
  auto ring = make_gf(2, 2);
  for (int i = 0; i < 30; ++i) {
    SkewPoly n = random_skew_nonzero(rng, ring, 3);
    SkewPoly d = random_skew_nonzero(rng, ring, 3);
    SkewFraction x = SkewFraction::of(n, d);
    auto [dl, nl] = x.as_left_fraction();
    // d_left * num = n_left * den
    EXPECT_EQ(dl * x.num(), nl * x.den());
    EXPECT_FALSE(dl.is_zero());
  }
}

TEST(SkewFractions, InverseOfZeroRejected) {
  auto ring = make_gf(2, 1);
  try {
    SkewFraction::zero(ring).inv();
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::division_by_zero);
  }
}

TEST(SkewFractions, NotPerfectBaseRejected) {
  auto ring = make_ratfunc(2);
  try {
    SkewFraction::from_poly(F(ring));
    FAIL() << "expected NotPerfect";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_perfect);
  }
}

TEST(CrmSearch, OreFailureFTFOverF2t) {
  auto ring = make_ratfunc(2);
  RingElem t = *ring->symbol_elem('t');
  SkewPoly a = F(ring);
  SkewPoly b = SkewPoly::term(t, 1);  // tF
  for (i64 maxdeg : {0, 1, 2, 4, 8}) {
    EXPECT_FALSE(common_right_multiple_search(a, b, maxdeg).has_value()) << maxdeg;
  }
}

TEST(CrmSearch, PowerPairOverF4) {
  auto ring = make_gf(2, 2);
  auto w = common_right_multiple_search(F(ring), F(ring, 2), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(F(ring) * w->u, F(ring, 2) * w->v);
  EXPECT_FALSE((F(ring) * w->u).is_zero());
}

TEST(CrmSearch, RandomPerfectPairsAlwaysFound) {
  Rng rng(307);
  std::vector<RingPtr> rings = {make_gf(2, 2), make_gf(3, 2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 20; ++i) {
      SkewPoly a = random_skew_nonzero(rng, ring, 3);
      SkewPoly b = random_skew_nonzero(rng, ring, 3);
      i64 maxdeg = a.degree().get() + b.degree().get();
      auto w = common_right_multiple_search(a, b, maxdeg);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(a * w->u, b * w->v);
    }
  }
}

TEST(CrmSearch, SolvablePairOverF2t) {
  auto ring = make_ratfunc(2);
  RingElem t = *ring->symbol_elem('t');
  // F u = t^2 F v has the solution u = t v
  SkewPoly a = F(ring);
  SkewPoly b = SkewPoly::term(ring->mul(t, t), 1);
  auto w = common_right_multiple_search(a, b, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(a * w->u, b * w->v);
}

TEST(CrmSearch, AgreesWithLclmOracle) {
  Rng rng(311);
  auto ring = make_gf(2, 2);
  for (int i = 0; i < 15; ++i) {
    SkewPoly a = random_skew_nonzero(rng, ring, 3);
    SkewPoly b = random_skew_nonzero(rng, ring, 3);
    // the right Ore property: lcrm exists; the search must find a witness at
    // the lcrm's degree budget
    auto e = euclid_left(a, b);
    EXPECT_EQ(a * e.ru, e.lcrm);
    EXPECT_EQ(b * e.rv, e.lcrm);
    i64 budget = std::max(e.ru.degree().get(), e.rv.degree().get());
    EXPECT_TRUE(common_right_multiple_search(a, b, budget).has_value());
  }
}

}  // namespace
