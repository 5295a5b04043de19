#pragma once

#include <array>
#include <utility>
#include <vector>

#include "trident/curve.hpp"

namespace trident {

/// A(a), B(a) of the rank >= 4 family y^2 = x^3 + A x^2 + B x over Q(a).
Rat family_A(const Rat& a);
Rat family_B(const Rat& a);

struct BaseFamily {
  CurveQ curve;
  std::array<PointQ, 4> points;
};

/// Throws MathError for degenerate a and std::logic_error if one of the four
/// x-coordinates does not lift.
BaseFamily base_family(const Rat& a);

/// The five one-parameter substitutions a(w_i), i = 1..5.
Rat substitution(int i, const Rat& w);

/// y^2 = x^3 + a x^2 + b x with six x-coordinates of sections.
struct WCurve {
  Rat a, b;
  std::array<Rat, 6> x;

  CurveQ curve() const { return CurveQ::from_ab(a, b); }
  /// Lifts every x; throws std::logic_error when one does not lift.
  std::vector<PointQ> points() const;
};

WCurve curve_w2(const Rat& w2);
WCurve curve_w3(const Rat& w3);

/// Values of the two (w2, w3) conditions.
std::pair<Rat, Rat> condition_values(const Rat& w2, const Rat& w3);

/// Rational w2 with condition `which` (0 or 1) vanishing at w3, ascending.
std::vector<Rat> solve_condition_w2(int which, const Rat& w3);

/// Values of the two (w2, w5) conditions.
std::pair<Rat, Rat> condition5_values(const Rat& w2, const Rat& w5);

/// Rational w5 with (w2, w5) condition `which` vanishing at w2, ascending.
std::vector<Rat> solve_condition5_w5(int which, const Rat& w2);

/// b3 a2^2 == b2 a3^2 for the w3 and w2 curves.
bool coincidence_check(const Rat& w2, const Rat& w3);

/// j-invariant of the base family at a.
Rat family_j(const Rat& a);

struct SevenPoints {
  CurveQ curve;
  std::vector<PointQ> points;
  std::array<bool, 6> ratio_identities{};  // x3i / a3 == x2i / a2
};

/// The six sections of curve_w3(w3) and the image of the sixth section of
/// curve_w2(w2). Throws MathError off the condition locus.
SevenPoints seven_points(const Rat& w2, const Rat& w3);

}  // namespace trident
