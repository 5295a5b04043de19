#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trident {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational. Every Rat produced by this library is
/// canonical: lowest terms, positive denominator, zero stored as 0/1, so
/// equality is structural.
using Rat = mpq_class;

/// Base class for mathematical errors (degenerate parameters, singular
/// curves, off-curve points). Distinct from std::invalid_argument, which is
/// reserved for contract violations such as a negative input to int_sqrt.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value did not factor completely over the coprime basis it was given.
class IncompleteBasis : public MathError {
 public:
  using MathError::MathError;
};

/// The prime divides the discriminant or a coefficient denominator.
class BadPrime : public MathError {
 public:
  using MathError::MathError;
};

/// A documented case the library declines to handle (e.g. j = 0 or 1728
/// isomorphism testing).
class Unsupported : public MathError {
 public:
  using MathError::MathError;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "n", "-n", "n/d". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rat parse_rat(std::string_view text);

/// Exact "num/den" form, denominator always present.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// k with k^2 = n, or nullopt when n is not a perfect square.
/// Throws std::invalid_argument when n < 0.
std::optional<Int> int_sqrt(const Int& n);

/// Nonnegative square root of q when q is the square of a rational.
std::optional<Rat> is_square_rat(const Rat& q);

/// Exact rational k-th root (k >= 1), the positive one for even k.
std::optional<Rat> rat_root(const Rat& q, unsigned long k);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Pairwise-coprime integers > 1, none a perfect square, over which a set of
/// integers factors completely. Built by gcd splitting, so no integer
/// factorization is ever attempted.
class CoprimeBasis {
 public:
  CoprimeBasis() = default;
  explicit CoprimeBasis(std::span<const Int> values) { extend(values); }

  /// Refines the basis so that |value| also factors over it. Zero throws
  /// std::invalid_argument.
  void extend(const Int& value);
  void extend(std::span<const Int> values);

  /// True when |value| is a product of powers of basis elements.
  bool factors(const Int& value) const;

  /// Exponent of each basis element in |value|; throws IncompleteBasis when
  /// a cofactor remains.
  std::vector<unsigned long> exponents(const Int& value) const;

  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Int> elements_;
};

CoprimeBasis coprime_basis(std::span<const Int> values);

/// A coset of Q*^2 in Q*: sign and exponent parities over a CoprimeBasis.
struct SquareClass {
  int sign = 1;
  std::vector<bool> parities;

  bool is_identity() const;
  SquareClass operator*(const SquareClass& other) const;
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Class of q in Q*/Q*^2. Throws MathError for q = 0 and IncompleteBasis when
/// num(q) or den(q) does not factor over the basis.
SquareClass square_class(const Rat& q, const CoprimeBasis& basis);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);
int legendre(const Int& a, std::int64_t p);

/// Primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

bool is_small_prime(std::uint64_t n);

}  // namespace trident
