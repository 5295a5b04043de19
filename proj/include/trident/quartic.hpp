#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "trident/curve.hpp"

namespace trident {

/// v^2 = q4 w^4 + q3 w^3 + q2 w^2 + q1 w + q0 with a known point (w0, y0).
struct QuarticModel {
  std::array<Rat, 5> coeffs;  // q4, q3, q2, q1, q0
  Rat w0, y0;

  Rat value(const Rat& w) const;
};

/// Builds the model and checks y0^2 = Q(w0); y0 is taken nonnegative.
/// Throws MathError when Q(w0) is not a square.
QuarticModel make_quartic(const std::array<Rat, 5>& coeffs, const Rat& w0);

/// Weierstrass curve with the birational maps. The known point goes to O.
struct QuarticReduction {
  QuarticModel quartic;
  CurveQ curve;
  // Q(w0 + u) = a u^4 + b u^3 + c u^2 + d u + q^2.
  Rat a, b, c, d, q;

  /// (w, v) on the quartic to the curve; nullopt at w = w0 with v != y0.
  std::optional<PointQ> forward(const Rat& w, const Rat& v) const;
  /// Curve point back to (w, v); nullopt where the map is undefined.
  std::optional<std::pair<Rat, Rat>> inverse(const PointQ& P) const;
};

/// Requires y0 != 0; throws MathError otherwise.
QuarticReduction quartic_to_weierstrass(const QuarticModel& Q);

/// Quartic invariants I, J and the curve y^2 = x^3 - 27 I x - 27 J.
std::pair<Rat, Rat> quartic_invariants(const QuarticModel& Q);
CurveQ quartic_jacobian(const QuarticModel& Q);

enum class WQuartic { W3, W5 };

QuarticModel w_quartic(WQuartic which);

/// Value of the quartic and its square root when it is a square.
std::pair<Rat, std::optional<Rat>> quartic_value(WQuartic which, const Rat& w);

/// Published solutions for the quartic (the seeds of generation).
std::vector<Rat> listed_w_solutions(WQuartic which);

/// Distinct w with square quartic value: the listed ones first, then new
/// ones from sums of points on the Weierstrass model.
std::vector<Rat> generate_w_solutions(WQuartic which, std::size_t count);

}  // namespace trident
