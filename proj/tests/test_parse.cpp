#include <gtest/gtest.h>

#include "froblab/parse.hpp"
#include "froblab/rng.hpp"

using namespace froblab;

namespace {

TEST(Parse, FTimesXNormalizes) {
  auto ring = make_poly_ring(2);
  SkewPoly v = parse_skew_expr("F*x", ring);
  EXPECT_EQ(v.to_string(), "x^2*F");
}

TEST(Parse, XTimesFIsAlreadyNormal) {
  auto ring = make_poly_ring(2);
  EXPECT_EQ(parse_skew_expr("x*F", ring).to_string(), "x*F");
}

TEST(Parse, SquareOfFPlusOneInCharTwo) {
  auto ring = make_gf(2, 1);
  SkewPoly v = parse_skew_expr("(F+1)^2", ring);
  EXPECT_EQ(v, SkewPoly::f_power(ring, 2) + SkewPoly::one(ring));
}

TEST(Parse, MinusFoldsThroughCharacteristic) {
  auto ring = make_gf(3, 1);
  SkewPoly v = parse_skew_expr("F - 1", ring);
  EXPECT_EQ(v, SkewPoly::f_power(ring, 1) + SkewPoly::constant(ring->from_int(2)));
}

TEST(Parse, WhitespaceAndNesting) {
  auto ring = make_gf(2, 2);
  SkewPoly a = parse_skew_expr("( w + 1 ) * F^2 + w", ring);
  SkewPoly b = parse_skew_expr("(w+1)*F^2+w", ring);
  EXPECT_EQ(a, b);
}

TEST(Parse, RoundTripOnRandomElements) {
  Rng rng(1009);
  std::vector<RingPtr> rings = {make_gf(2, 1), make_gf(2, 2), make_gf(3, 2),
                                make_poly_ring(2), make_poly_ring(3)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 200; ++i) {
      SkewPoly a = random_skew(rng, ring, 4, 2);
      std::string s = a.to_string();
      SkewPoly b = parse_skew_expr(s, ring);
      EXPECT_EQ(a, b) << s;
      EXPECT_EQ(b.to_string(), s);
    }
  }
}

TEST(Parse, RoundTripPolynomialCoefficientsOverRatFunc) {
  // fractions are print-only; polynomial coefficients round trip
  Rng rng(1013);
  auto ring = make_ratfunc(2);
  const auto& rr = static_cast<const RatFuncRing&>(*ring);
  for (int i = 0; i < 60; ++i) {
    std::map<i64, RingElem> m;
    i64 d = rng.below(4);
    for (i64 j = 0; j <= d; ++j) {
      FqPoly f = random_fqpoly(rng, ring->coeff_spec(), 2);
      if (!f.is_zero()) m.emplace(j, rr.from_poly(f));
    }
    SkewPoly a(ring, std::move(m));
    std::string s = a.to_string();
    EXPECT_EQ(parse_skew_expr(s, ring), a) << s;
  }
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  auto ring = make_gf(2, 1);
  try {
    parse_skew_expr("F +", ring);
    FAIL() << "expected SyntaxError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::syntax_error);
    EXPECT_NE(e.detail().find("position"), std::string::npos);
  }
  try {
    parse_skew_expr("(F", ring);
    FAIL() << "expected SyntaxError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::syntax_error);
  }
}

TEST(Parse, UnknownSymbols) {
  auto ring = make_gf(2, 1);
  for (const char* bad : {"t", "w", "x", "z"}) {
    try {
      parse_skew_expr(bad, ring);
      FAIL() << "expected UnknownSymbol for " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::unknown_symbol);
    }
  }
  // and the symbols that do exist elsewhere
  EXPECT_NO_THROW(parse_skew_expr("w", make_gf(2, 2)));
  EXPECT_NO_THROW(parse_skew_expr("x", make_poly_ring(2)));
  EXPECT_NO_THROW(parse_skew_expr("t", make_ratfunc(2)));
}

TEST(Parse, RingElemRejectsPositiveFDegree) {
  auto ring = make_gf(2, 1);
  try {
    parse_ring_elem("F+1", ring);
    FAIL() << "expected InvalidParams";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::invalid_params);
  }
}

}  // namespace
