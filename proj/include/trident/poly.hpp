#pragma once

#include <initializer_list>
#include <vector>

#include "trident/arith.hpp"

namespace trident {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros. The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(const Rat& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& k) const;
  Poly operator-() const;
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative() const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  void divmod(const Poly& d, Poly& q, Poly& r) const;

  /// Positive rational multiple with coprime integer coefficients.
  Poly primitive() const;

  /// Integer coefficients of primitive(); sign of the lead preserved.
  std::vector<Int> integer_coeffs() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);

/// All distinct rational roots, ascending. Exact: integer roots of the monic
/// integer rescaling are isolated with a Sturm sequence and bisection.
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace trident
