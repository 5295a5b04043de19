#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "trident/quartic.hpp"
#include "trident/records.hpp"

using namespace trident;

namespace {

// A random quartic with a prescribed point (w0, v0).
QuarticModel random_quartic(std::mt19937_64& g) {
  for (;;) {
    std::array<Rat, 5> c;
    for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = oracle::random_rat(g, 30, 6);
    Rat w0 = oracle::random_rat(g, 10, 3), v0 = oracle::random_nonzero(g, 10, 3);
    c[4] = 0;
    QuarticModel tmp{c, w0, 0};
    c[4] = v0 * v0 - tmp.value(w0);
    auto [I, J] = quartic_invariants(QuarticModel{c, w0, v0});
    if (4 * I * I * I - J * J == 0 || c[0] == 0) continue;
    return make_quartic(c, w0);
  }
}

}  // namespace

TEST(Quartic, MakeRequiresSquare) {
  EXPECT_THROW(make_quartic({1, 0, 0, 0, 2}, 0), MathError);
  QuarticModel Q = make_quartic({1, 0, 0, 0, 4}, 0);
  EXPECT_EQ(Q.y0, 2);
}

TEST(Quartic, ReductionMatchesInvariantJacobian) {
  std::mt19937_64 g(15);
  for (int i = 0; i < 25; ++i) {
    QuarticModel Q = random_quartic(g);
    QuarticReduction R = quartic_to_weierstrass(Q);
    ASSERT_EQ(R.curve.j(), quartic_jacobian(Q).j());
    ASSERT_EQ(*R.forward(Q.w0, Q.y0), PointQ::infinity());
    ASSERT_EQ(*R.inverse(PointQ::infinity()), std::make_pair(Q.w0, Q.y0));
  }
}

TEST(Quartic, ForwardInverseRoundTrip) {
  QuarticReduction R = quartic_to_weierstrass(w_quartic(WQuartic::W3));
  for (const Rat& w : listed_w_solutions(WQuartic::W3)) {
    Rat v = *is_square_rat(R.quartic.value(w));
    for (const Rat& vv : {v, Rat(-v)}) {
      auto P = R.forward(w, vv);
      if (!P) continue;
      ASSERT_TRUE(on_curve(R.curve, *P));
      auto back = R.inverse(*P);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(back->first, w);
      EXPECT_EQ(back->second, vv);
    }
  }
  EXPECT_THROW(R.forward(1, 1), MathError);
}

TEST(Quartic, DisplayedEquivalences) {
  CurveQ E3(0, 1, 0, -28174550, Rat(Int("45644288448")));
  CurveQ E5(0, -1, 0, -124056, -10126800);
  EXPECT_EQ(quartic_to_weierstrass(w_quartic(WQuartic::W3)).curve.j(), E3.j());
  EXPECT_EQ(quartic_to_weierstrass(w_quartic(WQuartic::W5)).curve.j(), E5.j());
  EXPECT_EQ(quartic_jacobian(w_quartic(WQuartic::W3)).j(), E3.j());
}

TEST(Quartic, ListedSolutionsAreSquares) {
  const std::vector<Rat> expect = {-234, -30, -18, 26, 42, 94, make_rat(-202, 3), make_rat(-182, 3), make_rat(-14, 3)};
  EXPECT_EQ(listed_w_solutions(WQuartic::W3), expect);
  for (const Rat& w : expect) EXPECT_TRUE(quartic_value(WQuartic::W3, w).second.has_value()) << w;
  auto [val, root] = quartic_value(WQuartic::W3, 1);
  EXPECT_EQ(val, w_quartic(WQuartic::W3).value(1));
  EXPECT_FALSE(root.has_value());
}

TEST(Quartic, GeneratedSolutions) {
  for (WQuartic which : {WQuartic::W3, WQuartic::W5}) {
    auto listed = listed_w_solutions(which);
    auto gen = generate_w_solutions(which, listed.size() + 8);
    ASSERT_EQ(gen.size(), listed.size() + 8);
    for (std::size_t i = 0; i < gen.size(); ++i) {
      ASSERT_TRUE(quartic_value(which, gen[i]).second.has_value());
      for (std::size_t k = 0; k < i; ++k) ASSERT_NE(gen[i], gen[k]);
    }
    EXPECT_TRUE(std::equal(listed.begin(), listed.end(), gen.begin()));
  }
  EXPECT_TRUE(generate_w_solutions(WQuartic::W3, 0).empty());
}

TEST(Quartic, W5RootsFromModel) {
  QuarticReduction R = quartic_to_weierstrass(w_quartic(WQuartic::W5));
  auto gen = generate_w_solutions(WQuartic::W5, 4);
  for (const Rat& w : gen) {
    Rat v = *is_square_rat(R.quartic.value(w));
    auto P = R.forward(w, v);
    if (!P) continue;
    auto back = R.inverse(*P);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->first, w);
  }
}
