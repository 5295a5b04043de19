#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "trident/sieve.hpp"

using namespace trident;

TEST(Ap, SmallExamples) {
  CurveQ E(0, 0, 0, 1, 0);
  EXPECT_EQ(ap(E, 5), 2);
  EXPECT_EQ(ap(E, 3), 0);
  EXPECT_THROW(ap(E, 2), BadPrime);
}

TEST(Ap, BruteForceAndHasseOnRandomCurves) {
  std::mt19937_64 g(16);
  std::uniform_int_distribution<long> c(-40, 40);
  int curves = 0;
  while (curves < 5) {
    CurveQ E(0, 0, 0, 0, 1);
    try {
      E = CurveQ(c(g) % 2, c(g), c(g) % 2, c(g), c(g));
    } catch (const MathError&) {
      continue;
    }
    for (auto p : primes_up_to(50)) {
      if (E.disc().get_num() % p == 0) {
        ASSERT_THROW(ap(E, p), BadPrime);
        continue;
      }
      long a = ap(E, p);
      ASSERT_EQ(static_cast<long>(p) + 1 - a, oracle::brute_force_count(E, p));
      ASSERT_LE(static_cast<double>(a * a), 4.0 * p);
    }
    ++curves;
  }
}

TEST(MestreNagao, BelowFirstGoodPrime) {
  CurveQ E = CurveQ::from_ab(0, 1);  // disc = -64: 2 is the only bad prime
  EXPECT_EQ(mestre_nagao(E, 2), 0.0);
  EXPECT_EQ(mestre_nagao(E, 1), 0.0);
  EXPECT_GT(mestre_nagao(E, 3), -std::numeric_limits<double>::infinity());
}

TEST(MestreNagao, TermShape) {
  // Each good prime adds (2 - a_p) / #E(F_p) * log p; a_p = 2 adds nothing.
  CurveQ E(0, 0, 0, 1, 0);
  ASSERT_EQ(ap(E, 5), 2);
  EXPECT_NEAR(mestre_nagao(E, 5) - mestre_nagao(E, 4), 0.0, 1e-12);
  for (long p : {3L, 7L, 11L, 13L, 29L}) {
    long count = oracle::brute_force_count(E, p);
    double term = static_cast<double>(2 - (p + 1 - count)) / static_cast<double>(count) * std::log(static_cast<double>(p));
    EXPECT_NEAR(mestre_nagao(E, p) - mestre_nagao(E, p - 1), term, 1e-12) << "p = " << p;
  }
}

TEST(MestreNagao, MatchesNaiveSumAtTwoOne) {
  CurveQ E = sieve_curve({2, 1});
  ASSERT_TRUE(E.is_integral());
  double expect = 0;
  for (auto p : primes_up_to(100)) {
    if (E.disc().get_num() % p == 0) continue;
    long n = oracle::brute_force_count(E, p);
    long a = static_cast<long>(p) + 1 - n;
    expect += static_cast<double>(2 - a) / static_cast<double>(n) * std::log(static_cast<double>(p));
  }
  EXPECT_NEAR(mestre_nagao(E, 100), expect, 1e-12 * std::fabs(expect));
}

TEST(Sieve, CurveIsIsomorphicToFamilyModel) {
  UVParams q{make_rat(-95, 33), make_rat(50, 57)};
  EXPECT_TRUE(isomorphic_over_q(sieve_curve(q), uv_curve(q).curve()).has_value());
}

TEST(Sieve, GridValuesOrdered) {
  auto vs = grid_values(2, 2);
  std::vector<Rat> expect = {-2, -1, 1, 2, make_rat(-1, 2), make_rat(1, 2)};
  EXPECT_EQ(vs, expect);
  EXPECT_TRUE(grid_values(0, 3).empty());
  EXPECT_TRUE(grid_values(3, 0).empty());
}

TEST(Sieve, EmptyRange) {
  SieveConfig cfg;
  cfg.u_num_max = 0;
  EXPECT_TRUE(enumerate_cells(cfg).empty());
  EXPECT_TRUE(sieve_grid(cfg).empty());
}

TEST(Sieve, DiagonalContainsListedCell) {
  SieveConfig cfg;
  cfg.diag = true;
  cfg.u_num_max = cfg.v_num_max = 80;
  cfg.u_den_max = cfg.v_den_max = 180;
  auto cells = enumerate_cells(cfg);
  bool found = false;
  for (const auto& [u, v] : cells) {
    ASSERT_EQ(u, v);
    found = found || u == make_rat(77, 173);
  }
  EXPECT_TRUE(found);
}

TEST(Sieve, DegenerateCellsSkipped) {
  SieveRecord r = sieve_cell(4, 1, SieveConfig{});
  EXPECT_FALSE(r.skipped.empty());
  EXPECT_FALSE(r.S1.has_value());
  EXPECT_TRUE(to_json(r).contains("skipped"));
}

TEST(Sieve, PermissiveGridCertifiesTwoOne) {
  SieveConfig cfg;
  cfg.u_num_max = 2;
  cfg.u_den_max = 1;
  cfg.v_num_max = 1;
  cfg.v_den_max = 1;
  cfg.s1_min = cfg.s2_min = -std::numeric_limits<double>::infinity();
  cfg.certify = true;
  bool found = false;
  for (const auto& r : sieve_grid(cfg)) {
    if (r.u == 2 && r.v == 1) {
      found = true;
      ASSERT_TRUE(r.certified_bound.has_value());
      EXPECT_GE(*r.certified_bound, 5);
      EXPECT_TRUE(r.pass1 && r.pass2);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Sieve, ParallelMatchesSerial) {
  SieveConfig cfg;
  cfg.u_num_max = 3;
  cfg.u_den_max = 2;
  cfg.v_num_max = 3;
  cfg.v_den_max = 2;
  cfg.n2 = 300;
  cfg.s1_min = 5;
  cfg.s2_min = 10;
  auto serial = sieve_grid_serial(cfg);
  for (int threads : {1, 2, 4}) {
    cfg.threads = threads;
    auto par = sieve_grid(cfg);
    ASSERT_EQ(par.size(), serial.size());
    for (std::size_t i = 0; i < par.size(); ++i) ASSERT_EQ(to_json(par[i]).dump(), to_json(serial[i]).dump());
  }
}

TEST(Sieve, RootNumberHookUnsupported) {
  EXPECT_THROW(root_number(CurveQ(0, 0, 0, 1, 0)), Unsupported);
  SieveConfig cfg;
  cfg.root_number_filter = true;
  EXPECT_THROW(sieve_cell(2, 1, cfg), Unsupported);
}
