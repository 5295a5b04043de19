#include <gtest/gtest.h>

#include "support.hpp"
#include "trident/curve.hpp"

using namespace trident;

namespace {

CurveQ curve37a() { return CurveQ(0, 0, 1, -1, 0); }

}  // namespace

TEST(Curve, InvariantsOf11a1) {
  CurveQ E(0, -1, 1, -10, -20);
  Invariants inv = invariants(E);
  EXPECT_EQ(inv.c4, 496);
  EXPECT_EQ(inv.c6, 20008);
  EXPECT_EQ(inv.disc, -161051);
  EXPECT_EQ(inv.j, make_rat(-122023936, 161051));
  EXPECT_TRUE(E.is_integral());
}

TEST(Curve, SingularThrows) {
  EXPECT_THROW(CurveQ(0, 0, 0, 0, 0), MathError);
  EXPECT_THROW(CurveQ::from_ab(2, 1), MathError);  // x (x + 1)^2
  EXPECT_THROW(CurveQ::from_ab(3, 0), MathError);
}

TEST(GroupLaw, MultiplesOn37a) {
  CurveQ E = curve37a();
  PointQ P(0, 0);
  EXPECT_EQ(mul(E, 2, P), PointQ(1, 0));
  EXPECT_EQ(mul(E, 3, P), PointQ(-1, -1));
  EXPECT_EQ(mul(E, 4, P), PointQ(2, -3));
  EXPECT_EQ(mul(E, 5, P), PointQ(make_rat(1, 4), make_rat(-5, 8)));
  EXPECT_EQ(mul(E, 0, P), PointQ::infinity());
  EXPECT_EQ(mul(E, -1, P), neg(E, P));
  EXPECT_EQ(add(E, P, neg(E, P)), PointQ::infinity());
  EXPECT_THROW(add(E, P, PointQ(1, 1)), MathError);
}

TEST(GroupLaw, AssociativeAndCommutative) {
  CurveQ E = curve37a();
  PointQ P(0, 0);
  std::mt19937_64 g(5);
  std::uniform_int_distribution<int> k(-7, 7);
  for (int i = 0; i < 60; ++i) {
    PointQ A = mul(E, k(g), P), B = mul(E, k(g), P), C = mul(E, k(g), P);
    ASSERT_EQ(add(E, add(E, A, B), C), add(E, A, add(E, B, C)));
    ASSERT_EQ(add(E, A, B), add(E, B, A));
    ASSERT_TRUE(on_curve(E, add(E, A, B)));
  }
  EXPECT_EQ(mul(E, 7, P), add(E, mul(E, 3, P), mul(E, 4, P)));
}

TEST(WeierstrassMap, RoundTripAndComposition) {
  CurveQ E = curve37a();
  WeierstrassMap m{make_rat(2, 3), make_rat(1, 5), -2, make_rat(7, 2)};
  WeierstrassMap n{5, -1, make_rat(1, 3), 0};
  CurveQ E1 = transform(E, m);
  PointQ P(0, 0);
  PointQ Q = m.forward(P);
  EXPECT_TRUE(on_curve(E1, Q));
  EXPECT_EQ(m.backward(Q), P);
  EXPECT_EQ(transform(E1, m.inverse()), E);
  EXPECT_EQ(transform(E1, n), transform(E, m.then(n)));
  EXPECT_EQ(m.then(n).forward(P), n.forward(m.forward(P)));
  EXPECT_EQ(E1.j(), E.j());
  EXPECT_THROW(transform(E, WeierstrassMap{0, 0, 0, 0}), std::invalid_argument);
}

TEST(Isomorphism, DetectsAndRejects) {
  CurveQ E = curve37a();
  CurveQ F = transform(E, WeierstrassMap{make_rat(3, 7), 2, -1, 5});
  auto m = isomorphic_over_q(E, F);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(transform(E, *m), F);
  // A quadratic twist has the same j but is not isomorphic over Q.
  EXPECT_FALSE(isomorphic_over_q(CurveQ(0, 0, 0, -1, 1), CurveQ(0, 0, 0, -4, 8)).has_value());
  EXPECT_TRUE(isomorphic_over_q(CurveQ(0, 0, 0, -1, 1), CurveQ(0, 0, 0, -16, 64)).has_value());
  EXPECT_FALSE(isomorphic_over_q(E, CurveQ(0, -1, 1, -10, -20)).has_value());
}

TEST(Isomorphism, SpecialJ) {
  auto m = isomorphic_over_q(CurveQ(0, 0, 0, 1, 0), CurveQ(0, 0, 0, 16, 0));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(abs(m->u), make_rat(1, 2));
  EXPECT_FALSE(isomorphic_over_q(CurveQ(0, 0, 0, 1, 0), CurveQ(0, 0, 0, 2, 0)).has_value());
  EXPECT_TRUE(isomorphic_over_q(CurveQ(0, 0, 0, 0, 1), CurveQ(0, 0, 0, 0, 64)).has_value());
  EXPECT_FALSE(isomorphic_over_q(CurveQ(0, 0, 0, 0, 1), CurveQ(0, 0, 0, 0, 8)).has_value());
}

TEST(SplitForm, RootsAndMap) {
  CurveQ E = SplitCurve(-3, -8, -24).curve();
  SplitModel sm = split_form(transform(E, WeierstrassMap{make_rat(1, 2), 3, 1, -2}));
  EXPECT_EQ(sm.split.curve().j(), E.j());
  EXPECT_THROW(split_form(curve37a()), MathError);
  EXPECT_THROW(SplitCurve(1, 1, 2), MathError);
  SplitCurve S(make_rat(1, 2), -3, 0);
  EXPECT_EQ(S.e1, -3);
  EXPECT_EQ(S.e3, make_rat(1, 2));
}

TEST(SplitForm, IntegralModelShiftsSmallestRoot) {
  SplitModel m = integral_split_model(SplitCurve(-3, -8, -24));
  EXPECT_EQ(m.split.e1, 0);
  EXPECT_EQ(m.split.e2, 16);
  EXPECT_EQ(m.split.e3, 21);
  EXPECT_EQ(m.split.A(), -37);
  EXPECT_EQ(m.split.B(), 336);
  SplitCurve S(make_rat(1, 3), make_rat(5, 12), -1);
  SplitModel n = integral_split_model(S);
  EXPECT_TRUE(n.split.curve().is_integral());
  EXPECT_EQ(transform(S.curve(), n.map), n.split.curve());
  EXPECT_EQ(n.split.e2, 48);
  EXPECT_EQ(n.split.e3, 51);
}

TEST(ShortModel, IntegralAndIsomorphic) {
  CurveQ E(make_rat(1, 2), make_rat(-1, 3), 1, make_rat(5, 7), make_rat(-2, 9));
  ShortModel s = short_integral_model(E);
  EXPECT_EQ(transform(E, s.map), s.curve());
  EXPECT_TRUE(s.curve().is_integral());
}

struct TorsionCase {
  const char* label;
  long a[5];
  std::size_t order;
};

TEST(Torsion, KnownCurves) {
  const TorsionCase cases[] = {{"11a1", {0, -1, 1, -10, -20}, 5},   {"26b1", {1, -1, 1, -3, 3}, 7},
                               {"90c3", {1, -1, 1, -122, 1721}, 12}, {"54b3", {1, -1, 1, -14, 29}, 9},
                               {"66c1", {1, 0, 0, -45, 81}, 10},    {"30a2", {1, 0, 1, -19, 26}, 12},
                               {"210e2", {1, 0, 0, -1070, 7812}, 16}, {"37a1", {0, 0, 1, -1, 0}, 1},
                               {"x3-x", {0, 0, 0, -1, 0}, 4},       {"x3+1", {0, 0, 0, 0, 1}, 6}};
  for (const auto& c : cases) {
    CurveQ E(c.a[0], c.a[1], c.a[2], c.a[3], c.a[4]);
    auto T = torsion_subgroup(E);
    ASSERT_EQ(T.size(), c.order) << c.label;
    ASSERT_TRUE(T.front().inf);
    for (const auto& P : T) {
      ASSERT_TRUE(on_curve(E, P));
      ASSERT_EQ(mul(E, static_cast<long>(c.order), P), PointQ::infinity()) << c.label;
      ASSERT_TRUE(is_torsion(E, P));
    }
  }
  EXPECT_FALSE(is_torsion(curve37a(), PointQ(0, 0)));
}

TEST(PointCount, MatchesBruteForce) {
  const CurveQ curves[] = {curve37a(), CurveQ(0, -1, 1, -10, -20), CurveQ(1, 0, 0, -45, 81), CurveQ(0, 0, 0, -1, 0),
                           CurveQ(1, -1, 1, -3, 3)};
  for (const auto& E : curves) {
    for (auto p : primes_up_to(50)) {
      long expect = oracle::brute_force_count(E, p);
      if (invariants(E).disc.get_num() % p == 0) {
        EXPECT_THROW(count_points_mod_p(E, p), BadPrime);
        continue;
      }
      ASSERT_EQ(count_points_mod_p(E, p), expect) << "p=" << p;
    }
  }
  EXPECT_THROW(count_points_mod_p(CurveQ(0, 0, 0, make_rat(1, 3), 1), 3), BadPrime);
}
