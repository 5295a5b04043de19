#include "trident/triples.hpp"

#include <stdexcept>

namespace trident {

std::string pretty(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

namespace {

Rat witness(const Rat& x, const Rat& y) {
  auto w = is_square_rat(x * y + 1);
  if (!w) throw MathError(pretty(x) + "·" + pretty(y) + "+1 not a square");
  return *w;
}

}  // namespace

DiophTriple validate_triple(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0 || b == 0 || c == 0) throw MathError("triple has a zero element");
  if (a == b || a == c || b == c) throw MathError("triple has repeated elements");
  DiophTriple T{a, b, c, 0, 0, 0};
  T.r = witness(a, b);
  T.s = witness(a, c);
  T.t = witness(b, c);
  return T;
}

InducedCurve induced_curve(const DiophTriple& T) {
  Rat ab = T.a * T.b, ac = T.a * T.c, bc = T.b * T.c;
  if (ab == ac || ab == bc || ac == bc) throw MathError("induced curve is singular (repeated products)");
  InducedCurve out{SplitCurve(-ab, -ac, -bc), {-bc, 0}, {-ac, 0}, {-ab, 0}, {0, ab * T.c}, {1, T.r * T.s * T.t}};
  CurveQ E = out.curve.curve();
  for (const PointQ* P : {&out.A, &out.B, &out.C, &out.P, &out.S}) {
    if (!on_curve(E, *P)) throw std::logic_error("induced curve point off the curve");
  }
  return out;
}

DiophTriple lasic(const TripleParams& p) {
  const Rat &t1 = p.t1, &t2 = p.t2, &t3 = p.t3;
  Rat m = t1 * t2 * t3;
  Rat D = (m - 1) * (m + 1);
  if (D == 0) throw MathError("t1 t2 t3 = +-1");
  Rat a = 2 * t1 * (1 + t1 * t2 * (1 + t2 * t3)) / D;
  Rat b = 2 * t2 * (1 + t2 * t3 * (1 + t3 * t1)) / D;
  Rat c = 2 * t3 * (1 + t3 * t1 * (1 + t1 * t2)) / D;
  return validate_triple(a, b, c);
}

std::array<bool, 3> square_conditions(const TripleParams& p) {
  return {is_square_rat(p.t3 * (p.t3 - p.t2)).has_value(), is_square_rat(p.t1 * (p.t1 - p.t3)).has_value(),
          is_square_rat(p.t2 * (p.t2 - p.t1)).has_value()};
}

Rat rank_jump_x(const TripleParams& p) {
  const Rat &t1 = p.t1, &t2 = p.t2, &t3 = p.t3;
  Rat m = t1 * t2 * t3;
  Rat den = t3 * (m - 1) * (m - 1) * (m + 1) * (m + 1);
  if (den == 0) throw MathError("rank jump point: vanishing denominator");
  return -4 * (t2 * t2 * t3 - t3 + t2) * (t3 * t1 * t1 * t2 + 1 + t3 * t1) * (t2 * t3 + t2 * t3 * t3 * t1 + 1) / den;
}

std::optional<PointQ> rank_jump_point(const TripleParams& p, const DiophTriple& T, int which) {
  // Rotating (t1,t2,t3) -> (t2,t3,t1) rotates (a,b,c) -> (b,c,a).
  Rat a = T.a, b = T.b, c = T.c;
  Rat s2 = p.t2, s3 = p.t3;
  if (which == 1) {
    a = T.b, b = T.c, c = T.a;
    s2 = p.t3, s3 = p.t1;
  } else if (which == 2) {
    a = T.c, b = T.a, c = T.b;
    s2 = p.t1, s3 = p.t2;
  } else if (which != 0) {
    throw std::out_of_range("rank_jump_point: which must be 0, 1 or 2");
  }
  if (s2 * s3 == 0) throw MathError("rank jump point: vanishing denominator");
  Rat x = b * (c - b) / (s2 * s3) - a * b;
  Rat y2 = (x + T.a * T.b) * (x + T.a * T.c) * (x + T.b * T.c);
  auto y = is_square_rat(y2);
  if (!y || *y == 0) return std::nullopt;
  return PointQ(x, *y);
}

CuboidSides cuboid_sides(const Rat& m) {
  Rat m2 = m * m;
  CuboidSides s;
  s.s1 = 2 * (m2 + m + 1) * (m2 - 1) * (m2 - 1) * (m2 + 1 + 4 * m);
  s.s2 = 4 * (m2 + m + 1) * (2 * m + 1) * (m2 - 1) * (2 * m + m2);
  s.s4 = (2 * m + 1) * (2 * m + m2) * (3 * m2 + 2 * m + 1) * (m2 + 2 * m + 3);
  s.s3 = m * (2 * m + 1) * (m + 2) * (5 * m2 + 8 * m + 5) * (m2 + 1);
  if (s.s1 == 0 || s.s2 == 0 || s.s3 == 0 || s.s4 == 0) throw MathError("degenerate cuboid parameter m = " + pretty(m));
  return s;
}

TripleParams cuboid_params(const Rat& m) {
  CuboidSides s = cuboid_sides(m);
  return {-s.s1 * s.s1, s.s2 * s.s2, s.s3 * s.s3};
}

}  // namespace trident
