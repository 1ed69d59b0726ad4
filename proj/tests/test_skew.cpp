#include <gtest/gtest.h>

#include "froblab/rng.hpp"
#include "froblab/skew.hpp"

using namespace froblab;

namespace {

SkewPoly F(const RingPtr& ring, i64 k = 1) { return SkewPoly::f_power(ring, k); }

TEST(SkewMul, DefiningRelation) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  // F * x = x^2 F
  SkewPoly lhs = F(ring) * SkewPoly::constant(x);
  SkewPoly rhs = SkewPoly::term(ring->mul(x, x), 1);
  EXPECT_EQ(lhs, rhs);
}

TEST(SkewMul, XFTimesXF) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  SkewPoly xf = SkewPoly::term(x, 1);
  // (xF)(xF) = x * x^2 F^2 = x^3 F^2
  SkewPoly expect = SkewPoly::term(ring->mul(ring->mul(x, x), x), 2);
  EXPECT_EQ(xf * xf, expect);
}

TEST(SkewMul, IdentityElement) {
  Rng rng(3);
  auto ring = make_gf(3, 2);
  for (int i = 0; i < 30; ++i) {
    SkewPoly b = random_skew(rng, ring, 4);
    EXPECT_EQ(SkewPoly::one(ring) * b, b);
    EXPECT_EQ(b * SkewPoly::one(ring), b);
  }
}

TEST(SkewMul, RelationOnRandomScalars) {
  Rng rng(17);
  std::vector<RingPtr> rings = {make_gf(2, 2), make_gf(3, 2), make_poly_ring(2), make_ratfunc(2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 50; ++i) {
      RingElem s = random_elem(rng, ring);
      EXPECT_EQ(F(ring) * SkewPoly::constant(s),
                SkewPoly::term(ring->frobenius(s), 1));
    }
  }
}

TEST(SkewRing, AssociativityAndDistributivity) {
  Rng rng(29);
  std::vector<RingPtr> rings = {make_gf(2, 2), make_gf(3, 2), make_poly_ring(2), make_ratfunc(2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 40; ++i) {
      SkewPoly a = random_skew(rng, ring, 3, 1);
      SkewPoly b = random_skew(rng, ring, 3, 1);
      SkewPoly c = random_skew(rng, ring, 3, 1);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
    }
  }
}

TEST(SkewRing, AxiomsOverProductAndQuotientBases) {
  Rng rng(37);
  auto spec2 = FieldSpec::make(2, 1, 1);
  FqPoly y2 = FqPoly::monomial(spec2, FqElem::one(spec2), 2);
  std::vector<RingPtr> rings = {
      make_product({FieldSpec::make(2, 1, 1), FieldSpec::make(2, 2, 1)}),
      make_quotient(2, 1, y2, 'y')};
  for (const auto& ring : rings) {
    for (int i = 0; i < 60; ++i) {
      SkewPoly a = random_skew(rng, ring, 3);
      SkewPoly b = random_skew(rng, ring, 3);
      SkewPoly c = random_skew(rng, ring, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
    }
    for (int i = 0; i < 30; ++i) {
      RingElem s = random_elem(rng, ring);
      EXPECT_EQ(F(ring) * SkewPoly::constant(s), SkewPoly::term(ring->frobenius(s), 1));
    }
  }
}

TEST(SkewRing, DegreeAddsOverDomains) {
  Rng rng(31);
  auto ring = make_poly_ring(3);
  for (int i = 0; i < 40; ++i) {
    SkewPoly a = random_skew_nonzero(rng, ring, 4, 1);
    SkewPoly b = random_skew_nonzero(rng, ring, 4, 1);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(DivRight, WorkedExampleOverF4) {
  auto ring = make_gf(2, 2);
  RingElem w = *ring->symbol_elem('w');
  RingElem one = ring->one();
  // A = F^2 + wF + 1, B = F + w  ==>  Q = F + 1, R = w^2 = w + 1
  SkewPoly A = F(ring, 2) + SkewPoly::term(w, 1) + SkewPoly::one(ring);
  SkewPoly B = F(ring) + SkewPoly::constant(w);
  auto [Q, R] = div_right(A, B);
  EXPECT_EQ(Q, F(ring) + SkewPoly::one(ring));
  EXPECT_EQ(R, SkewPoly::constant(ring->add(w, one)));
  EXPECT_EQ(Q * B + R, A);
}

TEST(DivRight, SelfDivision) {
  auto ring = make_gf(3, 2);
  Rng rng(5);
  SkewPoly A = random_skew_nonzero(rng, ring, 4);
  auto [Q, R] = div_right(A, A);
  EXPECT_EQ(Q, SkewPoly::one(ring));
  EXPECT_TRUE(R.is_zero());
}

TEST(DivRight, WorksOverRationalFunctions) {
  auto ring = make_ratfunc(2);
  RingElem t = *ring->symbol_elem('t');
  SkewPoly A = F(ring);
  SkewPoly B = SkewPoly::term(t, 1);  // tF
  auto [Q, R] = div_right(A, B);
  EXPECT_TRUE(R.is_zero());
  EXPECT_EQ(Q, SkewPoly::constant(ring->inv(t)));
  EXPECT_EQ(Q * B + R, A);
}

TEST(DivRight, RandomMultiplyBack) {
  Rng rng(43);
  std::vector<RingPtr> rings = {make_gf(2, 2), make_gf(3, 2), make_ratfunc(2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 60; ++i) {
      SkewPoly A = random_skew(rng, ring, 5, 1);
      SkewPoly B = random_skew_nonzero(rng, ring, 3, 1);
      auto [Q, R] = div_right(A, B);
      EXPECT_EQ(Q * B + R, A);
      EXPECT_TRUE(R.degree() < B.degree());
    }
  }
}

TEST(DivRight, RejectsPolynomialBase) {
  auto ring = make_poly_ring(2);
  try {
    div_right(F(ring), F(ring));
    FAIL() << "expected NotAField";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_a_field);
  }
}

TEST(DivLeft, SimplePowers) {
  auto ring = make_gf(2, 2);
  auto [Q, R] = div_left(F(ring, 2), F(ring));
  EXPECT_EQ(Q, F(ring));
  EXPECT_TRUE(R.is_zero());
}

TEST(DivLeft, MultiplyBackOracle) {
  auto ring = make_gf(2, 2);
  RingElem w = *ring->symbol_elem('w');
  SkewPoly A = F(ring, 2) + SkewPoly::term(w, 1);
  SkewPoly B = F(ring) + SkewPoly::one(ring);
  auto [Q, R] = div_left(A, B);
  EXPECT_EQ(B * Q + R, A);
  EXPECT_TRUE(R.degree() < B.degree());
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    SkewPoly X = random_skew(rng, ring, 5);
    SkewPoly Y = random_skew_nonzero(rng, ring, 3);
    auto [Q2, R2] = div_left(X, Y);
    EXPECT_EQ(Y * Q2 + R2, X);
    EXPECT_TRUE(R2.degree() < Y.degree());
  }
}

TEST(DivLeft, NotPerfectOverRationalFunctions) {
  auto ring = make_ratfunc(2);
  RingElem t = *ring->symbol_elem('t');
  try {
    div_left(F(ring), SkewPoly::term(t, 1));
    FAIL() << "expected NotPerfect";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_perfect);
  }
}

TEST(Gcrd, DivisibilityChain) {
  auto ring = make_gf(2, 2);
  auto res = gcrd_lclm(F(ring, 2), F(ring));
  EXPECT_EQ(res.gcrd, F(ring));
  EXPECT_EQ(res.lclm, F(ring, 2));
}

TEST(Gcrd, CoprimePair) {
  auto ring = make_gf(2, 1);
  auto res = gcrd_lclm(F(ring) + SkewPoly::one(ring), F(ring));
  EXPECT_TRUE(res.gcrd.is_one());
  EXPECT_EQ(res.lclm.degree(), FDegree::of(2));
}

TEST(Gcrd, ConstructedCommonDivisor) {
  Rng rng(71);
  auto ring = make_gf(2, 2);
  for (int i = 0; i < 40; ++i) {
    SkewPoly D = random_skew_nonzero(rng, ring, 2);
    SkewPoly C = random_skew_nonzero(rng, ring, 2);
    SkewPoly E = random_skew_nonzero(rng, ring, 2);
    auto res = gcrd_lclm(C * D, E * D);
    // gcrd is right-divisible by D
    EXPECT_TRUE(div_right(res.gcrd, D).remainder.is_zero());
  }
}

TEST(Gcrd, BezoutAndLclmIdentities) {
  Rng rng(73);
  std::vector<RingPtr> rings = {make_gf(2, 2), make_gf(3, 2)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 50; ++i) {
      SkewPoly A = random_skew_nonzero(rng, ring, 4);
      SkewPoly B = random_skew_nonzero(rng, ring, 4);
      auto res = gcrd_lclm(A, B);
      EXPECT_EQ(res.u * A + res.v * B, res.gcrd);
      EXPECT_EQ(res.lu * A, res.lclm);
      EXPECT_EQ(res.lv * B, res.lclm);
      EXPECT_TRUE(div_right(A, res.gcrd).remainder.is_zero());
      EXPECT_TRUE(div_right(B, res.gcrd).remainder.is_zero());
      // deg lclm = deg A + deg B - deg gcrd
      EXPECT_EQ(res.lclm.degree(),
                FDegree::of(A.degree().get() + B.degree().get() - res.gcrd.degree().get()));
    }
  }
}

TEST(Gcrd, NotPerfectOverRationalFunctions) {
  auto ring = make_ratfunc(2);
  try {
    gcrd_lclm(F(ring), F(ring, 2));
    FAIL() << "expected NotPerfect";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_perfect);
  }
}

TEST(RightIdealGenerator, PowerChain) {
  auto ring = make_gf(2, 2);
  SkewPoly g = right_ideal_generator({F(ring, 2), F(ring, 3)});
  EXPECT_EQ(g, F(ring, 2));
}

TEST(RightIdealGenerator, UnitIdeal) {
  auto ring = make_gf(2, 1);
  SkewPoly g = right_ideal_generator({F(ring) + SkewPoly::one(ring), F(ring)});
  EXPECT_TRUE(g.is_one());
}

TEST(RightIdealGenerator, SingleGeneratorIsMonicNormalized) {
  auto ring = make_gf(3, 2);
  Rng rng(79);
  SkewPoly g = random_skew_nonzero(rng, ring, 3);
  SkewPoly out = right_ideal_generator({g});
  EXPECT_TRUE(out.leading().is_one());
  // same ideal: each divides the other on the left
  EXPECT_TRUE(div_left(g, out).remainder.is_zero());
  EXPECT_TRUE(div_left(out, g).remainder.is_zero());
}

TEST(RightIdealGenerator, LeftDividesConstructedFamily) {
  Rng rng(83);
  auto ring = make_gf(2, 2);
  for (int i = 0; i < 30; ++i) {
    SkewPoly g = random_skew_nonzero(rng, ring, 2);
    SkewPoly h1 = random_skew_nonzero(rng, ring, 2);
    SkewPoly h2 = random_skew_nonzero(rng, ring, 2);
    SkewPoly gen = right_ideal_generator({g * h1, g * h2});
    EXPECT_TRUE(div_left(gen, g).remainder.is_zero());
  }
}

TEST(RightIdealGenerator, EmptyInput) {
  try {
    right_ideal_generator({});
    FAIL() << "expected EmptyInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::empty_input);
  }
}

TEST(Degree, MinusInfinityBehaves) {
  auto ring = make_gf(2, 1);
  EXPECT_TRUE(SkewPoly::zero(ring).degree() == FDegree::minus_infinity());
  EXPECT_TRUE(FDegree::minus_infinity() < FDegree::of(0));
  EXPECT_EQ(FDegree::minus_infinity() + FDegree::of(3), FDegree::minus_infinity());
}

TEST(Printing, DescendingNormalForm) {
  auto ring = make_poly_ring(2);
  RingElem x = *ring->symbol_elem('x');
  SkewPoly a = SkewPoly::term(ring->mul(x, ring->mul(x, x)), 2) + SkewPoly::one(ring);
  EXPECT_EQ(a.to_string(), "x^3*F^2 + 1");
}

}  // namespace
