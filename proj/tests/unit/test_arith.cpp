#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "trident/arith.hpp"

using namespace trident;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("6/4"), make_rat(3, 2));
  EXPECT_EQ(parse_rat("-12"), Rat(-12));
  EXPECT_EQ(to_string(parse_rat("-10/4")), "-5/2");
  EXPECT_EQ(to_string(Rat(7)), "7/1");
  EXPECT_EQ(to_string(Rat(0)), "0/1");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rat(""), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/2/3"), std::invalid_argument);
}

TEST(Rational, CanonicalForm) {
  Rat q = make_rat(Int(-6), Int(-4));
  EXPECT_EQ(q.get_num(), 3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rat(0, 5).get_den(), 1);
}

TEST(Squares, IntSqrt) {
  EXPECT_EQ(*int_sqrt(Int(0)), 0);
  EXPECT_EQ(*int_sqrt(Int("152415787532388367501905199875019052100")), Int("12345678901234567890"));
  EXPECT_FALSE(int_sqrt(Int(2)).has_value());
  EXPECT_THROW(int_sqrt(Int(-4)), std::invalid_argument);
}

TEST(Squares, Rational) {
  EXPECT_EQ(*is_square_rat(make_rat(9, 4)), make_rat(3, 2));
  EXPECT_FALSE(is_square_rat(make_rat(-9, 4)).has_value());
  EXPECT_FALSE(is_square_rat(make_rat(9, 2)).has_value());
  EXPECT_EQ(*rat_root(make_rat(-27, 8), 3), make_rat(-3, 2));
  EXPECT_EQ(*rat_root(make_rat(16, 81), 4), make_rat(2, 3));
  EXPECT_FALSE(rat_root(make_rat(-16, 81), 4).has_value());
}

TEST(Squares, RandomSquaresRoundTrip) {
  std::mt19937_64 g(1);
  for (int i = 0; i < 200; ++i) {
    Rat q = oracle::random_rat(g, 100000, 1000);
    Rat sq = q * q;
    ASSERT_EQ(*is_square_rat(sq), abs(q));
    if (q != 0) {
      ASSERT_FALSE(is_square_rat(-sq).has_value());
    }
  }
}

TEST(CoprimeBasis, SquareReducesToRoot) {
  CoprimeBasis b;
  b.extend(Int(4));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.elements()[0], 2);
}

TEST(CoprimeBasis, SplitsSharedFactors) {
  std::vector<Int> v{Int(12), Int(18)};
  CoprimeBasis b(v);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Int g;
      mpz_gcd(g.get_mpz_t(), b.elements()[i].get_mpz_t(), b.elements()[j].get_mpz_t());
      EXPECT_EQ(g, 1);
    }
  }
  EXPECT_TRUE(b.factors(Int(12)));
  EXPECT_TRUE(b.factors(Int(-18)));
  EXPECT_TRUE(b.factors(Int(1)));
  EXPECT_FALSE(b.factors(Int(5)));
  EXPECT_THROW(b.exponents(Int(10)), IncompleteBasis);
  EXPECT_THROW(b.extend(Int(0)), std::invalid_argument);
}

TEST(CoprimeBasis, RandomProductsFactorAndReconstruct) {
  std::mt19937_64 g(2);
  std::uniform_int_distribution<long> d(2, 5000);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Int> vals;
    for (int k = 0; k < 6; ++k) vals.push_back(Int(d(g)) * Int(d(g)) * Int(d(g)));
    CoprimeBasis b(vals);
    const auto& el = b.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      ASSERT_GT(el[i], 1);
      ASSERT_FALSE(int_sqrt(el[i]).has_value());
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), el[i].get_mpz_t(), el[j].get_mpz_t());
        ASSERT_EQ(gg, 1);
      }
    }
    for (const Int& v : vals) {
      auto e = b.exponents(v);
      Int prod = 1;
      for (std::size_t i = 0; i < el.size(); ++i) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), el[i].get_mpz_t(), e[i]);
        prod *= pw;
      }
      ASSERT_EQ(prod, v);
    }
  }
}

TEST(SquareClass, IdentityIffSquare) {
  std::vector<Int> v{Int(2), Int(3), Int(5), Int(7)};
  CoprimeBasis b(v);
  EXPECT_TRUE(square_class(make_rat(36, 25), b).is_identity());
  EXPECT_FALSE(square_class(make_rat(-36, 25), b).is_identity());
  EXPECT_FALSE(square_class(make_rat(3, 5), b).is_identity());
  EXPECT_EQ(square_class(make_rat(3, 1), b) * square_class(make_rat(5, 1), b), square_class(make_rat(15, 4), b));
  EXPECT_THROW(square_class(Rat(0), b), MathError);
  EXPECT_THROW(square_class(Rat(11), b), IncompleteBasis);
}

TEST(SquareClass, MultiplicativeOnRandomPairs) {
  std::mt19937_64 g(3);
  std::vector<Int> primes;
  for (auto p : primes_up_to(50)) primes.push_back(Int(p));
  CoprimeBasis b(primes);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(primes.size()) - 1), e(0, 3), s(0, 1);
  auto rnd = [&] {
    Rat q(s(g) ? -1 : 1);
    for (int k = 0; k < 4; ++k) {
      Int p = primes[static_cast<std::size_t>(pick(g))];
      for (int i = e(g); i > 0; --i) q *= k % 2 ? Rat(p) : Rat(1) / Rat(p);
    }
    return q;
  };
  for (int i = 0; i < 200; ++i) {
    Rat x = rnd(), y = rnd();
    ASSERT_EQ(square_class(x, b) * square_class(y, b), square_class(x * y, b));
    ASSERT_TRUE(square_class(x * x, b).is_identity());
  }
}

TEST(Legendre, MatchesEulerCriterion) {
  for (auto p : primes_up_to(200)) {
    if (p == 2) continue;
    for (long a = -30; a < 2 * static_cast<long>(p); ++a) {
      // Oracle: a^((p-1)/2) mod p.
      long r = 1, base = ((a % static_cast<long>(p)) + p) % p;
      for (long k = (p - 1) / 2; k > 0; --k) r = r * base % p;
      int expect = base == 0 ? 0 : (r == 1 ? 1 : -1);
      ASSERT_EQ(legendre(a, p), expect) << a << " mod " << p;
      ASSERT_EQ(legendre(Int(a), p), expect);
    }
  }
}

TEST(Primes, SieveMatchesTrialDivision) {
  auto ps = primes_up_to(1000);
  std::vector<std::uint32_t> expect;
  for (std::uint32_t n = 2; n <= 1000; ++n) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) expect.push_back(n);
  }
  EXPECT_EQ(ps, expect);
  EXPECT_TRUE(is_small_prime(997));
  EXPECT_FALSE(is_small_prime(1));
  EXPECT_FALSE(is_small_prime(91));
}
