#include "trident/quartic.hpp"

#include <algorithm>
#include <stdexcept>

#include "trident/poly.hpp"
#include "trident/records.hpp"

namespace trident {

Rat QuarticModel::value(const Rat& w) const {
  Rat acc(0);
  for (const Rat& k : coeffs) acc = acc * w + k;
  return acc;
}

QuarticModel make_quartic(const std::array<Rat, 5>& coeffs, const Rat& w0) {
  QuarticModel Q{coeffs, w0, 0};
  auto y = is_square_rat(Q.value(w0));
  if (!y) throw MathError("quartic value at " + to_string(w0) + " is not a square");
  Q.y0 = *y;
  return Q;
}

QuarticReduction quartic_to_weierstrass(const QuarticModel& Q) {
  if (Q.y0 == 0) throw MathError("quartic reduction needs a base point with nonzero value");
  // Taylor shift to the base point.
  Poly p(std::vector<Rat>{Q.coeffs[4], Q.coeffs[3], Q.coeffs[2], Q.coeffs[1], Q.coeffs[0]});
  Poly shifted;
  Poly lin{Q.w0, Rat(1)};
  for (int k = 4; k >= 0; --k) shifted = shifted * lin + Poly{p.coeff(k)};
  QuarticReduction R{Q, CurveQ(0, 0, 0, 0, 1), shifted.coeff(4), shifted.coeff(3), shifted.coeff(2),
                     shifted.coeff(1), Q.y0};
  if (shifted.coeff(0) != Q.y0 * Q.y0) throw std::logic_error("quartic shift lost the base point");
  const Rat &a = R.a, &b = R.b, &c = R.c, &d = R.d, &q = R.q;
  Rat a1 = d / q;
  Rat a2 = c - d * d / (4 * q * q);
  Rat a3 = 2 * q * b;
  Rat a4 = -4 * q * q * a;
  R.curve = CurveQ(a1, a2, a3, a4, a2 * a4);
  return R;
}

std::optional<PointQ> QuarticReduction::forward(const Rat& w, const Rat& v) const {
  if (v * v != quartic.value(w)) throw MathError("forward: (w, v) is not on the quartic");
  Rat u = w - quartic.w0;
  if (u == 0) {
    if (v == q) return PointQ::infinity();
    return std::nullopt;
  }
  Rat u2 = u * u;
  Rat x = (2 * q * (v + q) + d * u) / u2;
  Rat y = (4 * q * q * (v + q) + 2 * q * (d * u + c * u2) - d * d * u2 / (2 * q)) / (u2 * u);
  PointQ P(x, y);
  if (!on_curve(curve, P)) throw std::logic_error("quartic forward map left the curve");
  return P;
}

std::optional<std::pair<Rat, Rat>> QuarticReduction::inverse(const PointQ& P) const {
  if (!on_curve(curve, P)) throw MathError("inverse: point not on the curve");
  if (P.inf) return std::make_pair(quartic.w0, q);
  if (P.y == 0) {
    // At 2-torsion u solves (x u - d)^2 / 4q^2 - x = a u^2 + b u + c; keep the root that maps back to P.
    Rat q2 = 4 * q * q;
    Rat A = P.x * P.x / q2 - a;
    Rat B = 2 * P.x * d / q2 + b;
    Rat C = d * d / q2 - P.x - c;
    std::vector<Rat> roots;
    if (A == 0) {
      if (B != 0) roots.push_back(C / B);
    } else if (auto s = is_square_rat(B * B - 4 * A * C)) {
      roots = {(B + *s) / (2 * A), (B - *s) / (2 * A)};
    }
    for (const Rat& u : roots) {
      if (u == 0) continue;
      Rat v = -q + u * (u * P.x - d) / (2 * q);
      Rat w = quartic.w0 + u;
      if (v * v != quartic.value(w)) continue;
      auto image = forward(w, v);
      if (image && *image == P) return std::make_pair(w, v);
    }
    return std::nullopt;
  }
  Rat u = (2 * q * (P.x + c) - d * d / (2 * q)) / P.y;
  Rat v = -q + u * (u * P.x - d) / (2 * q);
  Rat w = quartic.w0 + u;
  if (v * v != quartic.value(w)) throw std::logic_error("quartic inverse map left the quartic");
  return std::make_pair(w, v);
}

std::pair<Rat, Rat> quartic_invariants(const QuarticModel& Q) {
  const Rat &a = Q.coeffs[0], &b = Q.coeffs[1], &c = Q.coeffs[2], &d = Q.coeffs[3], &e = Q.coeffs[4];
  Rat I = 12 * a * e - 3 * b * d + c * c;
  Rat J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  return {I, J};
}

CurveQ quartic_jacobian(const QuarticModel& Q) {
  auto [I, J] = quartic_invariants(Q);
  return CurveQ(0, 0, 0, -27 * I, -27 * J);
}

namespace {

const json& quartic_record(WQuartic which) {
  return records().at("quartics").at(which == WQuartic::W3 ? "w3" : "w5");
}

}  // namespace

QuarticModel w_quartic(WQuartic which) {
  const json& r = quartic_record(which);
  std::array<Rat, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = rat_from_json(r.at("coefficients").at(i));
  return make_quartic(c, rat_from_json(r.at("seed")));
}

std::pair<Rat, std::optional<Rat>> quartic_value(WQuartic which, const Rat& w) {
  Rat v = w_quartic(which).value(w);
  return {v, is_square_rat(v)};
}

std::vector<Rat> listed_w_solutions(WQuartic which) {
  std::vector<Rat> out;
  for (const auto& s : quartic_record(which).at("solutions")) out.push_back(rat_from_json(s));
  return out;
}

std::vector<Rat> generate_w_solutions(WQuartic which, std::size_t count) {
  std::vector<Rat> out;
  if (count == 0) return out;
  QuarticReduction R = quartic_to_weierstrass(w_quartic(which));
  const CurveQ& E = R.curve;
  auto push = [&out](const Rat& w) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  };

  std::vector<PointQ> gens;
  auto add_gen = [&](const PointQ& P) {
    if (P.inf || is_torsion(E, P)) return;
    if (std::find(gens.begin(), gens.end(), P) == gens.end()) gens.push_back(P);
  };
  for (const Rat& w : listed_w_solutions(which)) {
    auto v = is_square_rat(R.quartic.value(w));
    if (!v) throw std::logic_error("listed solution " + to_string(w) + " is not a square");
    push(w);
    if (auto P = R.forward(w, *v)) add_gen(*P);
  }
  // The points over w = w0 other than the base point sit at x = -a2.
  Rat x0 = -E.a2();
  Rat lin = E.a1() * x0 + E.a3();
  Rat rhs = ((x0 + E.a2()) * x0 + E.a4()) * x0 + E.a6();
  if (auto s = is_square_rat(lin * lin + 4 * rhs)) {
    add_gen(PointQ(x0, (-lin + *s) / 2));
    add_gen(PointQ(x0, (-lin - *s) / 2));
  }
  if (out.size() >= count || gens.empty()) {
    out.resize(std::min(out.size(), count));
    return out;
  }

  std::vector<PointQ> seen = gens;
  std::vector<PointQ> frontier = gens;
  const std::size_t kFrontierCap = 24;
  while (out.size() < count && !frontier.empty()) {
    std::vector<PointQ> next;
    for (const PointQ& P : frontier) {
      for (const PointQ& g : gens) {
        for (const PointQ& S : {add(E, P, g), add(E, P, neg(E, g))}) {
          if (S.inf || std::find(seen.begin(), seen.end(), S) != seen.end()) continue;
          seen.push_back(S);
          if (next.size() < kFrontierCap) next.push_back(S);
          if (auto wv = R.inverse(S)) push(wv->first);
          if (out.size() >= count) break;
        }
        if (out.size() >= count) break;
      }
      if (out.size() >= count) break;
    }
    frontier = std::move(next);
  }
  out.resize(std::min(out.size(), count));
  return out;
}

}  // namespace trident
