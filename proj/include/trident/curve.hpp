#pragma once

#include <optional>
#include <vector>

#include "trident/arith.hpp"

namespace trident {

/// Affine rational point or the point at infinity.
struct PointQ {
  bool inf = true;
  Rat x{0};
  Rat y{0};

  PointQ() = default;
  PointQ(Rat x_, Rat y_) : inf(false), x(std::move(x_)), y(std::move(y_)) {}
  static PointQ infinity() { return {}; }

  friend bool operator==(const PointQ& a, const PointQ& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
};

struct Invariants {
  Rat c4, c6, disc, j;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
class CurveQ {
 public:
  /// Throws MathError when the discriminant vanishes.
  CurveQ(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);

  /// y^2 = x^3 + A x^2 + B x.
  static CurveQ from_ab(const Rat& A, const Rat& B);

  const Rat& a1() const { return a1_; }
  const Rat& a2() const { return a2_; }
  const Rat& a3() const { return a3_; }
  const Rat& a4() const { return a4_; }
  const Rat& a6() const { return a6_; }

  Rat b2() const;
  Rat b4() const;
  Rat b6() const;
  Rat b8() const;
  Rat c4() const;
  Rat c6() const;
  const Rat& disc() const { return disc_; }
  Rat j() const;

  bool is_integral() const;

  friend bool operator==(const CurveQ& a, const CurveQ& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  Rat a1_, a2_, a3_, a4_, a6_;
  Rat disc_;
};

Invariants invariants(const CurveQ& E);

bool on_curve(const CurveQ& E, const PointQ& P);

/// Group law. Off-curve input throws MathError.
PointQ neg(const CurveQ& E, const PointQ& P);
PointQ add(const CurveQ& E, const PointQ& P, const PointQ& Q);
PointQ mul(const CurveQ& E, const Int& n, const PointQ& P);
inline PointQ mul(const CurveQ& E, long n, const PointQ& P) { return mul(E, Int(n), P); }

/// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, taking a
/// curve E to the curve E' in the primed coordinates.
struct WeierstrassMap {
  Rat u{1}, r{0}, s{0}, t{0};

  static WeierstrassMap identity() { return {}; }

  /// Apply this map, then `next`.
  WeierstrassMap then(const WeierstrassMap& next) const;
  WeierstrassMap inverse() const;

  CurveQ apply(const CurveQ& E) const;
  /// E-coordinates to E'-coordinates.
  PointQ forward(const PointQ& P) const;
  /// E'-coordinates back to E-coordinates.
  PointQ backward(const PointQ& P) const;

  friend bool operator==(const WeierstrassMap&, const WeierstrassMap&) = default;
};

/// Returns the transformed curve; throws std::invalid_argument when u = 0.
CurveQ transform(const CurveQ& E, const WeierstrassMap& m);

/// A map m with transform(E1, m) == E2, or nullopt.
std::optional<WeierstrassMap> isomorphic_over_q(const CurveQ& E1, const CurveQ& E2);

/// y^2 = (x - e1)(x - e2)(x - e3), e1 < e2 < e3.
struct SplitCurve {
  Rat e1, e2, e3;

  SplitCurve(Rat r1, Rat r2, Rat r3);
  CurveQ curve() const;
  Rat A() const { return -(e1 + e2 + e3); }
  Rat B() const { return e1 * e2 + e1 * e3 + e2 * e3; }
  Rat C() const { return -(e1 * e2 * e3); }
  const Rat& root(int i) const;
};

/// A split curve together with the map from the source model onto it.
struct SplitModel {
  SplitCurve split;
  WeierstrassMap map;
};

/// Throws MathError unless the 2-division cubic has three rational roots.
SplitModel split_form(const CurveQ& E);

/// Moves the smallest root to 0 and scales by the least integer lambda
/// making the other two roots integral. The map goes from S.curve() to the
/// new curve.
SplitModel integral_split_model(const SplitCurve& S);

/// y^2 = x^3 + A x + B with integral A, B and the map from E onto it.
struct ShortModel {
  Int A, B;
  WeierstrassMap map;
  CurveQ curve() const { return CurveQ(0, 0, 0, Rat(A), Rat(B)); }
};

ShortModel short_integral_model(const CurveQ& E);

/// Full rational torsion subgroup, infinity first, then points sorted.
std::vector<PointQ> torsion_subgroup(const CurveQ& E);

/// True iff kP = O for some 1 <= k <= 12.
bool is_torsion(const CurveQ& E, const PointQ& P);

/// Number of points on E over F_p, including infinity. E must be integral
/// at p; throws BadPrime when p divides the discriminant.
long count_points_mod_p(const CurveQ& E, long p);

}  // namespace trident
