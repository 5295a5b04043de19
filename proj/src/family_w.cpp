#include "trident/family_w.hpp"

#include <algorithm>
#include <stdexcept>

namespace trident {

Rat family_A(const Rat& a) {
  Rat a2 = a * a;
  return -2 * (-51200 + 109440 * a + 38880 * a2 + 55404 * a2 * a + 6561 * a2 * a2);
}

Rat family_B(const Rat& a) {
  return 243 * a * a * (20 + 3 * a) * (-4 + 9 * a) * (16 + 9 * a) * (80 + 9 * a) * (320 + 81 * a * a);
}

Rat family_j(const Rat& a) {
  Rat A = family_A(a), B = family_B(a);
  Rat d = B * B * (A * A - 4 * B);
  if (d == 0) throw MathError("family curve is singular at a = " + to_string(a));
  Rat c = A * A - 3 * B;
  return 256 * c * c * c / d;
}

namespace {

PointQ lift(const CurveQ& E, const Rat& x) {
  // Curves here have the shape y^2 = x^3 + A x^2 + B x.
  auto y = is_square_rat(((x + E.a2()) * x + E.a4()) * x);
  if (!y) throw std::logic_error("x-coordinate " + to_string(x) + " does not lift to a rational point");
  return {x, *y};
}

Rat horner(const std::vector<Int>& c, const Rat& w) {
  // Coefficients from the leading term down.
  Rat acc(0);
  for (const Int& k : c) acc = acc * w + Rat(k);
  return acc;
}

std::vector<Rat> rational_quadratic_roots(const Rat& A2, const Rat& A1, const Rat& A0) {
  std::vector<Rat> out;
  if (A2 == 0) {
    if (A1 != 0) out.push_back(-A0 / A1);
    return out;
  }
  auto s = is_square_rat(A1 * A1 - 4 * A2 * A0);
  if (!s) return out;
  out.push_back((-A1 + *s) / (2 * A2));
  out.push_back((-A1 - *s) / (2 * A2));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BaseFamily base_family(const Rat& a) {
  if (a == 0 || 3 * a == -20 || 9 * a == 4 || 9 * a == -16 || 9 * a == -80) {
    throw MathError("degenerate family parameter a = " + to_string(a));
  }
  CurveQ E = CurveQ::from_ab(family_A(a), family_B(a));
  Rat m4 = -4 + 9 * a, m80 = 80 + 9 * a, m20 = 20 + 3 * a;
  std::array<Rat, 4> xs{81 * a * a * m4 * m80, 27 * a * m20 * m4 * m80,
                        m4 * m80 * (160 + 171 * a) * (160 + 171 * a) / 441, 3 * m20 * m4 * (320 + 81 * a * a)};
  BaseFamily out{E, {}};
  for (std::size_t i = 0; i < 4; ++i) out.points[i] = lift(E, xs[i]);
  return out;
}

Rat substitution(int i, const Rat& w) {
  Rat w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
  Rat num, den;
  switch (i) {
    case 1:
      num = -2 * (-27 + 13 * w2) * (-13 + 27 * w2);
      den = 9 * (9 + 178 * w2 + 9 * w4);
      break;
    case 2:
      num = -64 * (831744 - 40128 * w + 4288 * w2 - 44 * w3 + w4);
      den = 9 * (-1520 + 88 * w + w2) * (-2736 - 264 * w + 5 * w2);
      break;
    case 3:
      num = 10732176 + 628992 * w + 19192 * w2 + 576 * w3 + 9 * w4;
      den = 36 * w * (27 + w) * (364 + 9 * w);
      break;
    case 4:
      num = 5 * (-10 + 6 * w + w2) * (-18 - 18 * w + 5 * w2);
      den = 9 * (12 - 2 * w + w2) * (3 - w + w2);
      break;
    case 5:
      num = 5 * (584820 + 135432 * w - 18288 * w2 + 396 * w3 + 5 * w4);
      den = 9 * (684 - 66 * w + w2) * (171 - 33 * w + w2);
      break;
    default:
      throw std::out_of_range("substitution index must be 1..5");
  }
  if (den == 0) throw MathError("substitution " + std::to_string(i) + " has a vanishing denominator");
  return num / den;
}

std::vector<PointQ> WCurve::points() const {
  CurveQ E = curve();
  std::vector<PointQ> out;
  for (const Rat& x : this->x) out.push_back(lift(E, x));
  return out;
}

namespace {

const std::vector<Int>& a_w2_coeffs() {
  static const std::vector<Int> c = {
      Int("79573"), Int("2281840"), Int("-791687936"), Int("-34844285696"), Int("3065917324288"),
      Int("556971294060544"), Int("-64165839736733696"), Int("3360211454234263552"),
      Int("-130403990149389221888"), Int("3064512846261648359424"), Int("-53369552205989831245824"),
      Int("422490869190468915167232"), Int("2120995723090424777146368"), Int("-21983951517250398896259072"),
      Int("-455536370311599498486349824"), Int("1197427029434259336824094720"),
      Int("38082411231292796255084740608")};
  return c;
}

const std::vector<Int>& a_w3_coeffs() {
  static const std::vector<Int> c = {
      Int("-13122"), Int("-7348320"), Int("-1570137696"), Int("-206172584064"), Int("-19541430237312"),
      Int("-1402008391816704"), Int("-77606011598363136"), Int("-3410103604914358272"),
      Int("-123219415654113963008"), Int("-3723833136566479233024"), Int("-92542375014630498607104"),
      Int("-1825654232153731017572352"), Int("-27787335201034030779236352"),
      Int("-320143070559304939026382848"), Int("-2662401630093588063697895424"),
      Int("-13606503227295711027839631360"), Int("-26532681293226636504287281152")};
  return c;
}

Rat quartic(long c4, long c3, long c2, long c1, long c0, const Rat& w) {
  return (((Rat(c4) * w + c3) * w + c2) * w + c1) * w + c0;
}

}  // namespace

WCurve curve_w2(const Rat& w) {
  Rat q1 = quartic(1, -44, 4288, -40128, 831744, w);
  Rat q2 = quartic(1, 352, -50720, 321024, 831744, w);
  Rat q3 = quartic(3, 352, 15328, -642048, 5822208, w);
  Rat q4 = quartic(7, -704, 15328, 321024, 2495232, w);
  Rat q5 = quartic(7, -176, 11680, -160512, 5822208, w);
  Rat q6 = quartic(7, 352, -61664, 321024, 5822208, w);
  Rat q7 = quartic(59, 3344, -572128, 3049728, 49072896, w);
  Rat q8 = quartic(13, -2552, 330784, -2327424, 10812672, w);
  Rat q9 = w * w - 912;
  WCurve out;
  out.a = horner(a_w2_coeffs(), w);
  out.b = -5184 * q1 * q1 * q2 * q3 * q4 * q5 * q6 * q7;
  out.x = {-576 * q1 * q1 * q5 * q6,
           36 * q1 * q5 * q6 * q7,
           make_rat(-16, 49) * q5 * q6 * q8 * q8,
           make_rat(-27, 4) * q3 * q4 * q5 * q7,
           -108 * q9 * q9 * q2 * q6 * q7,
           324 * q9 * q9 * q2 * q5 * q6};
  return out;
}

WCurve curve_w3(const Rat& w) {
  Rat r1 = quartic(1, 72, 8504, 550368, 10732176, w);
  Rat r2 = quartic(3, 144, 3160, 157248, 3577392, w);
  Rat r3 = quartic(3, 1152, 71144, 1257984, 3577392, w);
  Rat r4 = quartic(9, 504, 8504, 78624, 1192464, w);
  Rat r5 = quartic(9, 576, 19192, 628992, 10732176, w);
  Rat r6 = quartic(9, 1152, 58040, 1257984, 10732176, w);
  Rat r7 = quartic(9, 2736, 164872, 2987712, 10732176, w);
  Rat r8 = quartic(171, 16704, 753128, 18240768, 203911344, w);
  Rat r9 = w * w - 1092;
  Rat r10 = w * w + 54 * w + 1092;
  WCurve out;
  out.a = horner(a_w3_coeffs(), w);
  out.b = 81 * r1 * r2 * r3 * r4 * r5 * r5 * r6 * r7;
  out.x = {9 * r2 * r3 * r5 * r5,
           9 * r2 * r3 * r5 * r7,
           make_rat(1, 49) * r2 * r3 * r8 * r8,
           27 * r1 * r2 * r4 * r7,
           27 * r9 * r9 * r3 * r6 * r7,
           81 * r10 * r10 * r2 * r3 * r6};
  return out;
}

std::pair<Rat, Rat> condition_values(const Rat& w2, const Rat& w3) {
  Rat p = w2 * w2, q = w3 * w3;
  Rat ca = p * q + 72 * p * w3 + 88 * w2 * q + 1820 * p - 1520 * q - 96096 * w2 - 65664 * w3 - 995904;
  Rat cb = 5 * p * q + 21 * p * w3 - 264 * w2 * q + 3276 * p - 2736 * q + 288288 * w2 - 196992 * w3 - 4979520;
  return {ca, cb};
}

std::vector<Rat> solve_condition_w2(int which, const Rat& w3) {
  Rat q = w3 * w3;
  if (which == 0) {
    return rational_quadratic_roots(q + 72 * w3 + 1820, 88 * q - 96096, -1520 * q - 65664 * w3 - 995904);
  }
  if (which == 1) {
    return rational_quadratic_roots(5 * q + 21 * w3 + 3276, -264 * q + 288288, -2736 * q - 196992 * w3 - 4979520);
  }
  throw std::out_of_range("condition index must be 0 or 1");
}

std::pair<Rat, Rat> condition5_values(const Rat& w2, const Rat& w5) {
  Rat p = w2 * w2, q = w5 * w5;
  Rat ca = 9 * p * w5 - 4 * w2 * q - 198 * p + 528 * q + 1368 * w2 - 8208 * w5;
  Rat cb = 11 * p * q - 171 * p * w5 - 76 * w2 * q + 25992 * w2 + 155952 * w5 - 3430944;
  return {ca, cb};
}

std::vector<Rat> solve_condition5_w5(int which, const Rat& w2) {
  Rat p = w2 * w2;
  if (which == 0) return rational_quadratic_roots(-4 * w2 + 528, 9 * p - 8208, -198 * p + 1368 * w2);
  if (which == 1) return rational_quadratic_roots(11 * p - 76 * w2, -171 * p + 155952, 25992 * w2 - 3430944);
  throw std::out_of_range("condition index must be 0 or 1");
}

bool coincidence_check(const Rat& w2, const Rat& w3) {
  WCurve c2 = curve_w2(w2), c3 = curve_w3(w3);
  return c3.b * c2.a * c2.a == c2.b * c3.a * c3.a;
}

SevenPoints seven_points(const Rat& w2, const Rat& w3) {
  auto [ca, cb] = condition_values(w2, w3);
  if (ca != 0 && cb != 0) throw MathError("(w2, w3) is off the condition locus");
  if (!coincidence_check(w2, w3)) throw MathError("the w2 and w3 curves do not coincide at (w2, w3)");
  WCurve c2 = curve_w2(w2), c3 = curve_w3(w3);
  if (c2.a == 0 || c3.a == 0) throw MathError("vanishing a-coefficient on the locus");
  SevenPoints out{c3.curve(), c3.points(), {}};
  for (std::size_t i = 0; i < 6; ++i) out.ratio_identities[i] = c3.x[i] * c2.a == c2.x[i] * c3.a;
  out.points.push_back(lift(out.curve, c2.x[5] * c3.a / c2.a));
  return out;
}

}  // namespace trident
