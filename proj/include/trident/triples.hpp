#pragma once

#include <array>
#include <optional>
#include <string>

#include "trident/curve.hpp"

namespace trident {

/// {a, b, c} with ab+1 = r^2, ac+1 = s^2, bc+1 = t^2 and r, s, t >= 0.
struct DiophTriple {
  Rat a, b, c;
  Rat r, s, t;
};

struct TripleParams {
  Rat t1, t2, t3;
};

/// Throws MathError naming the failing product, or for zero / repeated
/// elements.
DiophTriple validate_triple(const Rat& a, const Rat& b, const Rat& c);

/// y^2 = (x+ab)(x+ac)(x+bc) and its five named points.
struct InducedCurve {
  SplitCurve curve;
  PointQ A, B, C;  // [-bc,0], [-ac,0], [-ab,0]
  PointQ P;        // [0, abc]
  PointQ S;        // [1, rst]
};

InducedCurve induced_curve(const DiophTriple& T);

/// The three-parameter family of triples. Throws MathError when
/// t1 t2 t3 = +-1 or the output triple is degenerate.
DiophTriple lasic(const TripleParams& p);

/// Squareness of t3(t3-t2), t1(t1-t3), t2(t2-t1).
std::array<bool, 3> square_conditions(const TripleParams& p);

/// x-coordinate, on the induced curve of lasic(p), of the point attached to
/// the first square condition, written in closed form.
Rat rank_jump_x(const TripleParams& p);

/// The point with x + ab = b(c-b)/(t2 t3) when its y is rational and
/// nonzero. `which` = 0, 1, 2 selects the condition by cyclic rotation:
/// t3(t3-t2), t1(t1-t3), t2(t2-t1).
std::optional<PointQ> rank_jump_point(const TripleParams& p, const DiophTriple& T, int which = 0);

struct CuboidSides {
  Rat s1, s2, s3, s4;
};

/// The one-parameter cuboid family: s1^2+s2^2, s2^2+s4^2, s1^2+s2^2+s4^2
/// are squares and s3^2 = s2^2 + s4^2. Throws MathError for degenerate m.
CuboidSides cuboid_sides(const Rat& m);

/// (t1, t2, t3) = (-s1^2, s2^2, s3^2).
TripleParams cuboid_params(const Rat& m);

/// Integer form when possible, else num/den; for messages and reports.
std::string pretty(const Rat& q);

}  // namespace trident
