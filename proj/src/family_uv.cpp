#include "trident/family_uv.hpp"

#include <stdexcept>

#include "trident/records.hpp"

namespace trident {

void validate_uv(const UVParams& q) {
  const Rat &u = q.u, &v = q.v;
  if (u == 0 || v == 0) throw MathError("family parameters need u != 0 and v != 0");
  if (u == 4 * v) throw MathError("family parameters need u != 4v");
  if (v == 16 * u) throw MathError("family parameters need v != 16u");
  if (v == 2 || v == -2) throw MathError("family parameters need v != +-2");
  if (v == 2 * u || v == -2 * u) throw MathError("family parameters need v != +-2u");
}

bool uv_is_valid(const UVParams& q) {
  try {
    validate_uv(q);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

TripleParams uv_to_t(const UVParams& q) {
  validate_uv(q);
  const Rat &u = q.u, &v = q.v;
  Rat t1 = v * v * (16 * u - v) / (8 * u * (u - 4 * v));
  Rat t3 = -v * (2 * t1 + v) / t1;
  if (t3 == 0) throw MathError("family parameters give t3 = 0");
  Rat t2 = -u * (2 * t3 + u) / t3;
  return {t1, t2, t3};
}

DiophTriple uv_to_triple(const UVParams& q) {
  validate_uv(q);
  const Rat &u = q.u, &v = q.v;
  Rat v2 = v * v, v4 = v2 * v2, u2 = u * u;
  Rat den = (2 + v) * (4 - 2 * v + v2) * (v - 2) * (v2 + 2 * v + 4);
  Rat a = -v2 * (16 * u - v) * (16 * v2 - 64 * u2 - v4 + 16 * u * v2 * v - 4 * v4 * v * u + v4 * u2) /
          (u * den * (2 * u - v) * (2 * u + v) * (u - 4 * v));
  Rat b = 16 * u * (u - 4 * v) * v * (4 * v - 64 * u + 16 * u * v2 - 4 * u2 * v - v4 * v + 4 * u2 * v2 * v) /
          (den * (2 * u - v) * (2 * u + v) * (16 * u - v));
  Rat c = 4 * (256 * u * v - 64 * u2 - 16 * v4 + 64 * u2 * v2 + v4 * v2 - 16 * v4 * v * u) * (2 * u - v) *
          (2 * u + v) / (u * den * (16 * u - v) * (u - 4 * v));
  return validate_triple(a, b, c);
}

namespace {

struct Term {
  long coef;
  int upow, vpow;
};

// A / v as a polynomial in (u, v).
const Term kATerms[] = {
    {256, 0, 13}, {-32, 0, 15}, {1, 0, 17}, {-4096, 1, 10},
    {-7936, 1, 12}, {1536, 1, 14}, {-128, 1, 16}, {4, 1, 18},
    {140288, 2, 9}, {32192, 2, 11}, {-24192, 2, 13}, {7816, 2, 15},
    {-449, 2, 17}, {-1167360, 3, 8}, {664832, 3, 10}, {-22528, 3, 12},
    {-36160, 3, 14}, {7824, 3, 16}, {741888, 4, 7}, {-2785824, 4, 9},
    {591360, 4, 11}, {-8616, 4, 13}, {-31368, 4, 15}, {-21258240, 5, 6},
    {11440128, 5, 8}, {-3244800, 5, 10}, {100992, 5, 12}, {70176, 5, 14},
    {28747776, 6, 5}, {-32380416, 6, 7}, {16818240, 6, 9}, {-2023776, 6, 11},
    {112296, 6, 13}, {71860224, 7, 4}, {6463488, 7, 6}, {-12979200, 7, 8},
    {2860032, 7, 10}, {-332160, 7, 12}, {-128483328, 8, 3}, {-2205696, 8, 5},
    {9461760, 8, 7}, {-2785824, 8, 9}, {46368, 8, 11}, {128188416, 9, 2},
    {-37027840, 9, 4}, {-1441792, 9, 6}, {2659328, 9, 8}, {-291840, 9, 10},
    {-29425664, 10, 1}, {32014336, 10, 3}, {-6193152, 10, 5}, {515072, 10, 7},
    {140288, 10, 9}, {1048576, 11, 0}, {-2097152, 11, 2}, {1572864, 11, 4},
    {-507904, 11, 6}, {-16384, 11, 8}, {65536, 12, 1}, {-131072, 12, 3},
    {65536, 12, 5}
};

Rat power(const Rat& x, int n) {
  Rat r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

std::pair<Rat, Rat> uv_model_coefficients(const UVParams& q) {
  validate_uv(q);
  const Rat &u = q.u, &v = q.v;
  std::vector<Rat> up(13), vp(19);
  for (int i = 0; i < 13; ++i) up[static_cast<std::size_t>(i)] = power(u, i);
  for (int i = 0; i < 19; ++i) vp[static_cast<std::size_t>(i)] = power(v, i);
  Rat A(0);
  for (const Term& t : kATerms) {
    A += Rat(t.coef) * up[static_cast<std::size_t>(t.upow)] * vp[static_cast<std::size_t>(t.vpow)];
  }
  A *= v;
  Rat u2 = u * u, v2 = v * v, v3 = v2 * v, v4 = v2 * v2, v5 = v4 * v;
  Rat B = 4 * (8 * v * u2 - 8 * u2 + 16 * v * u - v2 * u + v2 + 2 * v3) *
          (8 * v * u2 + 8 * u2 - 16 * v * u - v2 * u - v2 + 2 * v3) * (-16 * v2 + 64 * u2 + v4 - 16 * v3 * u) *
          (4 * v - 64 * u + 16 * v2 * u - 4 * v * u2 - v5 + 4 * v3 * u2) *
          (2 * v * u2 - 16 * u2 + 2 * v * u + 8 * v2 * u - 4 * v2 - v3) *
          (2 * v * u2 + 16 * u2 - 2 * v * u + 8 * v2 * u + 4 * v2 - v3) * (16 * v * u - 4 * u2 - v4 + 4 * v2 * u2) *
          (16 * v2 - 64 * u2 - v4 + 16 * v3 * u - 4 * v5 * u + v4 * u2) * power(16 * u - v, 2) *
          power(u - 4 * v, 2) * u2 * v3;
  return {A, B};
}

UVFamilyCurve uv_curve(const UVParams& q) {
  auto [A, B] = uv_model_coefficients(q);
  const Rat &u = q.u, &v = q.v;
  Rat u2 = u * u, v2 = v * v, v3 = v2 * v, v4 = v2 * v2, v5 = v4 * v, v6 = v3 * v3;
  Rat f1 = 4 * v - 64 * u + 16 * v2 * u - 4 * v * u2 - v5 + 4 * v3 * u2;
  Rat f2 = 16 * v2 - 64 * u2 - v4 + 16 * v3 * u - 4 * v5 * u + v4 * u2;
  Rat f3 = 64 * v2 * u2 - 64 * u2 - 16 * v5 * u + 256 * v * u + v6 - 16 * v4;
  Rat g1 = 16 * v * u - 4 * u2 - v4 + 4 * v2 * u2;
  Rat g2 = 8 * v * u2 + 8 * u2 - 16 * v * u - v2 * u - v2 + 2 * v3;
  Rat g3 = 8 * v * u2 - 8 * u2 + 16 * v * u - v2 * u + v2 + 2 * v3;
  Rat g4 = 8 * v * u2 + 8 * u2 + 32 * v * u - 16 * v2 * u - 4 * v2 - v3;
  Rat g5 = 8 * v * u2 - 8 * u2 - 32 * v * u - 16 * v2 * u + 4 * v2 - v3;
  Rat h1 = 2 * v * u2 - 16 * u2 + 2 * v * u + 8 * v2 * u - 4 * v2 - v3;
  Rat h2 = 2 * v * u2 + 16 * u2 - 2 * v * u + 8 * v2 * u + 4 * v2 - v3;
  Rat k1 = -v + 16 * u - 4 * v2 * u + v * u2;
  Rat k2 = 8 * u2 - v * u + 2 * v2;
  Rat m1 = -16 * v2 + 64 * u2 + v4 - 16 * v3 * u;
  Rat m2 = 8 * u2 - 16 * v * u - v2;
  Rat n1 = 2 * u2 + 8 * v * u - v2;
  Rat p16 = 16 * u - v, p4 = u - 4 * v, pm = 2 * u - v, pp = 2 * u + v;

  UVFamilyCurve out{q, A, B, {}, {}, {}, {}, {}};
  out.P = {-4 * f1 * f2 * p4 * p4 * u2 * p16 * p16 * v3,
           8 * f3 * f1 * f2 * pm * pm * pp * pp * p4 * p4 * u2 * p16 * p16 * v3};
  out.R = {4 * g1 * g2 * v * p16 * p4 * u * g3 * f2, 4 * g3 * f2 * g2 * g1 * g4 * g5 * pp * pm * v2 * p16 * p4 * u};
  // The published x-coordinate of T1 carries the opposite sign; this one
  // satisfies the model equation.
  out.T1 = {-16 * g1 * h1 * p16 * p4 * u * h2 * f1, 8 * g1 * h1 * p16 * p4 * u * h2 * k1 * k2 * f3 * f1};
  out.T2 = {-4 * g3 * m1 * g1 * g2 * f2 * p4 * u / v2, 4 * g3 * m1 * g1 * g2 * pp * pm * m2 * f3 * f2 * p4 * u / v3};
  out.T3 = {p16 * f1 * f2 * m1 * n1 * n1, 2 * m1 * pm * pp * g5 * g4 * k1 * n1 * f2 * f1 * p16};

  CurveQ E = out.curve();
  for (const PointQ& S : out.sections()) {
    if (!on_curve(E, S)) throw std::logic_error("family section does not satisfy the model equation");
  }
  return out;
}

namespace {

bool same_up_to_sign(const PointQ& a, const PointQ& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.x == b.x && (a.y == b.y || a.y == -b.y);
}

}  // namespace

UVCrossCheck uv_cross_check(const UVParams& q) {
  UVCrossCheck out;
  UVFamilyCurve F = uv_curve(q);
  TripleParams t = uv_to_t(q);
  DiophTriple T = uv_to_triple(q);
  InducedCurve I = induced_curve(T);
  CurveQ Ei = I.curve.curve();
  CurveQ Em = F.curve();
  auto iso = isomorphic_over_q(Ei, Em);
  if (!iso) return out;
  out.isomorphic = true;
  // On y^2 = x^3 + A x^2 + B x the maps differ by [-1] at most, which fixes
  // x and flips y.
  out.p_matches = same_up_to_sign(iso->forward(I.P), F.P);
  out.two_r_matches = same_up_to_sign(iso->forward(I.S), add(Em, F.R, F.R));
  const PointQ* Ts[3] = {&F.T1, &F.T2, &F.T3};
  for (int i = 0; i < 3; ++i) {
    auto J = rank_jump_point(t, T, i);
    out.t_matches[static_cast<std::size_t>(i)] = J && same_up_to_sign(iso->forward(*J), *Ts[i]);
  }
  return out;
}

IndependenceCertificate uv_certify(const UVParams& q) {
  UVFamilyCurve F = uv_curve(q);
  return independence_bound(F.curve(), F.sections(),
                            "uv(" + pretty(q.u) + "," + pretty(q.v) + ")");
}

std::vector<UVParams> rank11_parameter_list() {
  std::vector<UVParams> out;
  for (const auto& p : records().at("rank11").at("parameters")) {
    out.push_back({rat_from_json(p.at(0)), rat_from_json(p.at(1))});
  }
  return out;
}

}  // namespace trident
