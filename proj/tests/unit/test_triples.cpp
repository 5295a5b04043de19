#include <gtest/gtest.h>

#include "support.hpp"
#include "trident/family_uv.hpp"
#include "trident/triples.hpp"

using namespace trident;

TEST(Triple, ValidatesClassicTriple) {
  DiophTriple T = validate_triple(1, 3, 8);
  EXPECT_EQ(T.r, 2);
  EXPECT_EQ(T.s, 3);
  EXPECT_EQ(T.t, 5);
}

TEST(Triple, ValidatesLargeTriple) {
  EXPECT_NO_THROW(validate_triple(make_rat(Int("6125241375"), Int("11907531272")),
                                  make_rat(Int("5535371271425"), Int("14277129995128")),
                                  make_rat(Int("-273138178560"), Int("153430695649"))));
}

TEST(Triple, RejectsNonSquareProduct) {
  try {
    validate_triple(1, 2, 3);
    FAIL() << "expected an error";
  } catch (const MathError& e) {
    EXPECT_STREQ(e.what(), "1·2+1 not a square");
  }
  EXPECT_THROW(validate_triple(0, 3, 8), MathError);
  EXPECT_THROW(validate_triple(3, 3, 8), MathError);
}

TEST(Triple, InducedCurve) {
  InducedCurve I = induced_curve(validate_triple(1, 3, 8));
  EXPECT_EQ(I.curve.e1, -24);
  EXPECT_EQ(I.curve.e2, -8);
  EXPECT_EQ(I.curve.e3, -3);
  EXPECT_EQ(I.P, PointQ(0, 24));
  EXPECT_EQ(I.S, PointQ(1, 30));
  CurveQ E = I.curve.curve();
  for (const auto& P : {I.A, I.B, I.C, I.P, I.S}) EXPECT_TRUE(on_curve(E, P));
}

TEST(Lasic, RandomParametersGiveTriples) {
  std::mt19937_64 g(6);
  int done = 0;
  while (done < 100) {
    TripleParams p{oracle::random_rat(g, 50, 20), oracle::random_rat(g, 50, 20), oracle::random_rat(g, 50, 20)};
    DiophTriple T;
    try {
      T = lasic(p);
    } catch (const MathError&) {
      continue;
    }
    ASSERT_EQ(T.a * T.b + 1, T.r * T.r);
    ASSERT_EQ(T.a * T.c + 1, T.s * T.s);
    ASSERT_EQ(T.b * T.c + 1, T.t * T.t);
    ++done;
  }
}

TEST(Lasic, Rank10ParametersMatchListedTriple) {
  DiophTriple T = lasic({make_rat(44, 29), make_rat(17, 42), make_rat(3, 44)});
  EXPECT_EQ(T.a, make_rat(815848, 164547));
  EXPECT_EQ(T.b, make_rat(1512524, 1810017));
  EXPECT_EQ(T.c, make_rat(32060, 201113));
}

TEST(Lasic, Rank10ParametersUpToSign) {
  DiophTriple T = lasic({make_rat(44, 29), make_rat(17, 42), make_rat(3, 44)});
  EXPECT_EQ(abs(T.a), make_rat(815848, 164547));
  EXPECT_EQ(abs(T.b), make_rat(1512524, 1810017));
  EXPECT_EQ(abs(T.c), make_rat(32060, 201113));
}

TEST(Lasic, DegenerateProduct) {
  EXPECT_THROW(lasic({2, make_rat(1, 2), 1}), MathError);
  EXPECT_THROW(lasic({-2, make_rat(1, 2), 1}), MathError);
}

TEST(SquareConditions, Examples) {
  EXPECT_TRUE(square_conditions({1, 5, 5})[0]);
  EXPECT_FALSE(square_conditions({1, 2, 3})[0]);
  auto c = square_conditions(uv_to_t({2, 1}));
  EXPECT_TRUE(c[0] && c[1] && c[2]);
}

TEST(RankJump, ClosedFormMatchesIdentity) {
  std::mt19937_64 g(7);
  int done = 0;
  while (done < 50) {
    TripleParams p{oracle::random_rat(g, 50, 20), oracle::random_rat(g, 50, 20), oracle::random_rat(g, 50, 20)};
    try {
      DiophTriple T = lasic(p);
      ASSERT_EQ(rank_jump_x(p) + T.a * T.b, T.b * (T.c - T.b) / (p.t2 * p.t3));
    } catch (const MathError&) {
      continue;
    }
    ++done;
  }
}

TEST(RankJump, PointsOnFamilyParameters) {
  TripleParams p = uv_to_t({2, 1});
  DiophTriple T = lasic(p);
  CurveQ E = induced_curve(T).curve.curve();
  for (int which = 0; which < 3; ++which) {
    auto P = rank_jump_point(p, T, which);
    ASSERT_TRUE(P.has_value()) << which;
    EXPECT_TRUE(on_curve(E, *P));
  }
  EXPECT_EQ(rank_jump_point(p, T, 0)->x, rank_jump_x(p));
  EXPECT_THROW(rank_jump_point(p, T, 3), std::out_of_range);
}

TEST(RankJump, EqualParametersGiveNoPoint) {
  TripleParams p{make_rat(1, 3), 2, 2};
  DiophTriple T = lasic(p);
  std::optional<PointQ> P;
  try {
    P = rank_jump_point(p, T, 0);
  } catch (const MathError&) {
  }
  EXPECT_FALSE(P.has_value());
}

TEST(Cuboid, SidesAtTwo) {
  CuboidSides s = cuboid_sides(2);
  EXPECT_EQ(s.s3 * s.s3 - s.s2 * s.s2, s.s4 * s.s4);
  EXPECT_EQ(s.s3, Rat(2 * 5 * 4 * (5 * 4 + 16 + 5) * 5));
  EXPECT_THROW(cuboid_sides(1), MathError);
}

TEST(Cuboid, RandomParametersGiveSquares) {
  std::mt19937_64 g(8);
  int done = 0;
  while (done < 50) {
    Rat m = oracle::random_rat(g, 80, 25);
    CuboidSides s;
    try {
      s = cuboid_sides(m);
    } catch (const MathError&) {
      continue;
    }
    Rat a = s.s1 * s.s1, b = s.s2 * s.s2, d = s.s4 * s.s4;
    ASSERT_TRUE(is_square_rat(a + b).has_value());
    ASSERT_TRUE(is_square_rat(b + d).has_value());
    ASSERT_TRUE(is_square_rat(a + b + d).has_value());
    TripleParams p = cuboid_params(m);
    ASSERT_EQ(p.t1, -a);
    ASSERT_EQ(p.t2, b);
    ++done;
  }
}

TEST(Pretty, IntegersWithoutDenominator) {
  EXPECT_EQ(pretty(Rat(5)), "5");
  EXPECT_EQ(pretty(make_rat(-5, 3)), "-5/3");
}
