#include "trident/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "trident/poly.hpp"

namespace trident {

CurveQ::CurveQ(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  Rat b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  disc_ = -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
  if (disc_ == 0) throw MathError("singular curve (discriminant 0)");
}

CurveQ CurveQ::from_ab(const Rat& A, const Rat& B) { return CurveQ(0, A, 0, B, 0); }

Rat CurveQ::b2() const { return a1_ * a1_ + 4 * a2_; }
Rat CurveQ::b4() const { return 2 * a4_ + a1_ * a3_; }
Rat CurveQ::b6() const { return a3_ * a3_ + 4 * a6_; }
Rat CurveQ::b8() const {
  return a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
}
Rat CurveQ::c4() const {
  Rat b2v = b2();
  return b2v * b2v - 24 * b4();
}
Rat CurveQ::c6() const {
  Rat b2v = b2();
  return -b2v * b2v * b2v + 36 * b2v * b4() - 216 * b6();
}
Rat CurveQ::j() const {
  Rat c = c4();
  return c * c * c / disc_;
}

bool CurveQ::is_integral() const {
  return trident::is_integral(a1_) && trident::is_integral(a2_) && trident::is_integral(a3_) &&
         trident::is_integral(a4_) && trident::is_integral(a6_);
}

Invariants invariants(const CurveQ& E) { return {E.c4(), E.c6(), E.disc(), E.j()}; }

// ---------------------------------------------------------------------------
// Group law

bool on_curve(const CurveQ& E, const PointQ& P) {
  if (P.inf) return true;
  const Rat& x = P.x;
  const Rat& y = P.y;
  return y * y + E.a1() * x * y + E.a3() * y == ((x + E.a2()) * x + E.a4()) * x + E.a6();
}

namespace {

void require_on(const CurveQ& E, const PointQ& P) {
  if (!on_curve(E, P)) {
    throw MathError("point (" + to_string(P.x) + ", " + to_string(P.y) + ") is not on the curve");
  }
}

PointQ neg_raw(const CurveQ& E, const PointQ& P) {
  if (P.inf) return P;
  return {P.x, -P.y - E.a1() * P.x - E.a3()};
}

PointQ add_raw(const CurveQ& E, const PointQ& P, const PointQ& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  Rat lambda, nu;
  if (P.x == Q.x) {
    Rat den = 2 * P.y + E.a1() * P.x + E.a3();
    if (P.y != Q.y || den == 0) return PointQ::infinity();
    const Rat& x = P.x;
    lambda = (3 * x * x + 2 * E.a2() * x + E.a4() - E.a1() * P.y) / den;
    nu = (-x * x * x + E.a4() * x + 2 * E.a6() - E.a3() * P.y) / den;
  } else {
    Rat dx = Q.x - P.x;
    lambda = (Q.y - P.y) / dx;
    nu = (P.y * Q.x - Q.y * P.x) / dx;
  }
  Rat x3 = lambda * lambda + E.a1() * lambda - E.a2() - P.x - Q.x;
  Rat y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return {std::move(x3), std::move(y3)};
}

}  // namespace

PointQ neg(const CurveQ& E, const PointQ& P) {
  require_on(E, P);
  return neg_raw(E, P);
}

PointQ add(const CurveQ& E, const PointQ& P, const PointQ& Q) {
  require_on(E, P);
  require_on(E, Q);
  return add_raw(E, P, Q);
}

PointQ mul(const CurveQ& E, const Int& n, const PointQ& P) {
  require_on(E, P);
  Int k = abs(n);
  PointQ base = n < 0 ? neg_raw(E, P) : P;
  PointQ acc = PointQ::infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0 && k != 0; --bit) {
    acc = add_raw(E, acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = add_raw(E, acc, base);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Coordinate changes

WeierstrassMap WeierstrassMap::then(const WeierstrassMap& m2) const {
  WeierstrassMap out;
  out.u = u * m2.u;
  out.r = r + u * u * m2.r;
  out.s = s + u * m2.s;
  out.t = t + u * u * s * m2.r + u * u * u * m2.t;
  return out;
}

WeierstrassMap WeierstrassMap::inverse() const {
  if (u == 0) throw std::invalid_argument("Weierstrass map with u = 0");
  WeierstrassMap out;
  out.u = 1 / u;
  out.r = -r / (u * u);
  out.s = -s / u;
  out.t = (r * s - t) / (u * u * u);
  return out;
}

CurveQ WeierstrassMap::apply(const CurveQ& E) const {
  if (u == 0) throw std::invalid_argument("Weierstrass map with u = 0");
  const Rat &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
  Rat u2 = u * u;
  Rat u3 = u2 * u;
  Rat u4 = u2 * u2;
  Rat n1 = (a1 + 2 * s) / u;
  Rat n2 = (a2 - s * a1 + 3 * r - s * s) / u2;
  Rat n3 = (a3 + r * a1 + 2 * t) / u3;
  Rat n4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  Rat n6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / (u4 * u2);
  return CurveQ(n1, n2, n3, n4, n6);
}

PointQ WeierstrassMap::forward(const PointQ& P) const {
  if (P.inf) return P;
  Rat dx = P.x - r;
  return {dx / (u * u), (P.y - s * dx - t) / (u * u * u)};
}

PointQ WeierstrassMap::backward(const PointQ& P) const {
  if (P.inf) return P;
  Rat u2 = u * u;
  return {u2 * P.x + r, u2 * u * P.y + s * u2 * P.x + t};
}

CurveQ transform(const CurveQ& E, const WeierstrassMap& m) { return m.apply(E); }

namespace {

// Map onto y^2 = x^3 - c4/48 x - c6/864.
WeierstrassMap short_map(const CurveQ& E) {
  WeierstrassMap m;
  m.r = -E.b2() / 12;
  m.s = -E.a1() / 2;
  m.t = -(E.a3() + m.r * E.a1()) / 2;
  return m;
}

}  // namespace

std::optional<WeierstrassMap> isomorphic_over_q(const CurveQ& E1, const CurveQ& E2) {
  Rat A1 = -E1.c4() / 48, B1 = -E1.c6() / 864;
  Rat A2 = -E2.c4() / 48, B2 = -E2.c6() / 864;
  if (E1.j() != E2.j()) return std::nullopt;
  // Over Q the only automorphisms are [-1], so u is determined up to sign:
  // u^2 from the ratio when both A and B are nonzero, otherwise an exact
  // fourth (j = 1728) or sixth (j = 0) root.
  std::optional<Rat> u;
  if (A1 == 0) {
    u = rat_root(B1 / B2, 6);
  } else if (B1 == 0) {
    u = rat_root(A1 / A2, 4);
  } else {
    u = is_square_rat(B1 * A2 / (B2 * A1));
  }
  if (!u) return std::nullopt;
  Rat u4 = *u * *u * *u * *u;
  if (A1 / u4 != A2 || B1 / (u4 * *u * *u) != B2) return std::nullopt;
  WeierstrassMap scale;
  scale.u = *u;
  WeierstrassMap m = short_map(E1).then(scale).then(short_map(E2).inverse());
  if (!(transform(E1, m) == E2)) throw std::logic_error("isomorphism verification failed");
  return m;
}

// ---------------------------------------------------------------------------
// Split and short models

SplitCurve::SplitCurve(Rat r1, Rat r2, Rat r3) {
  std::vector<Rat> v{std::move(r1), std::move(r2), std::move(r3)};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw MathError("split curve with repeated roots");
  e1 = v[0];
  e2 = v[1];
  e3 = v[2];
}

CurveQ SplitCurve::curve() const { return CurveQ(0, A(), 0, B(), C()); }

const Rat& SplitCurve::root(int i) const {
  switch (i) {
    case 0: return e1;
    case 1: return e2;
    case 2: return e3;
    default: throw std::out_of_range("split curve root index");
  }
}

SplitModel split_form(const CurveQ& E) {
  WeierstrassMap m;
  m.s = -E.a1() / 2;
  m.t = -E.a3() / 2;
  CurveQ F = transform(E, m);
  // F: y^2 = x^3 + a2 x^2 + a4 x + a6.
  auto roots = rational_roots(Poly{F.a6(), F.a4(), F.a2(), Rat(1)});
  if (roots.size() != 3) throw MathError("2-division cubic does not split over Q");
  SplitCurve S(roots[0], roots[1], roots[2]);
  if (!(S.curve() == F)) throw std::logic_error("split form verification failed");
  return {S, m};
}

namespace {

// Least lambda > 0 with D | lambda^2, exact when D has at most a square
// cofactor above the trial-division range.
Int least_square_multiplier(Int D) {
  Int lambda(1);
  for (std::uint32_t p : primes_up_to(1U << 16)) {
    if (D == 1) break;
    Int P(p);
    unsigned long e = mpz_remove(D.get_mpz_t(), D.get_mpz_t(), P.get_mpz_t());
    for (unsigned long i = 0; i < (e + 1) / 2; ++i) lambda *= p;
  }
  if (D != 1) {
    if (auto s = int_sqrt(D)) {
      lambda *= *s;
    } else {
      lambda *= D;
    }
  }
  return lambda;
}

}  // namespace

SplitModel integral_split_model(const SplitCurve& S) {
  Rat d2 = S.e2 - S.e1, d3 = S.e3 - S.e1;
  Int lambda = least_square_multiplier(lcm(d2.get_den(), d3.get_den()));
  WeierstrassMap m;
  m.u = make_rat(Int(1), lambda);
  m.r = S.e1;
  Rat l2(lambda * lambda);
  SplitCurve out(Rat(0), d2 * l2, d3 * l2);
  if (!(transform(S.curve(), m) == out.curve())) throw std::logic_error("integral split model verification failed");
  return {out, m};
}

ShortModel short_integral_model(const CurveQ& E) {
  WeierstrassMap m = short_map(E);
  Rat c4 = E.c4(), c6 = E.c6();
  Int lambda = lcm(Rat(27 * c4).get_den(), Rat(54 * c6).get_den());
  WeierstrassMap scale;
  scale.u = make_rat(Int(1), 6 * lambda);
  m = m.then(scale);
  CurveQ W = transform(E, m);
  if (W.a1() != 0 || W.a2() != 0 || W.a3() != 0 || !W.is_integral()) {
    throw std::logic_error("short integral model verification failed");
  }
  return {W.a4().get_num(), W.a6().get_num(), m};
}

// ---------------------------------------------------------------------------
// Point counts

namespace {

long mod_p(const Rat& q, long p) {
  unsigned long up = static_cast<unsigned long>(p);
  unsigned long d = mpz_fdiv_ui(q.get_den().get_mpz_t(), up);
  if (d == 0) throw BadPrime("prime " + std::to_string(p) + " divides a coefficient denominator");
  unsigned long n = mpz_fdiv_ui(q.get_num().get_mpz_t(), up);
  Int inv;
  Int dd(d), pp(p);
  mpz_invert(inv.get_mpz_t(), dd.get_mpz_t(), pp.get_mpz_t());
  return static_cast<long>((n * inv.get_ui()) % up);
}

}  // namespace

long count_points_mod_p(const CurveQ& E, long p) {
  if (p < 2) throw std::invalid_argument("count_points_mod_p needs a prime");
  if (mod_p(E.disc(), p) == 0) throw BadPrime("prime " + std::to_string(p) + " divides the discriminant");
  long a1 = mod_p(E.a1(), p), a2 = mod_p(E.a2(), p), a3 = mod_p(E.a3(), p), a4 = mod_p(E.a4(), p),
       a6 = mod_p(E.a6(), p);
  if (p == 2) {
    long n = 1;
    for (long x = 0; x < 2; ++x) {
      for (long y = 0; y < 2; ++y) {
        long lhs = y * y + a1 * x * y + a3 * y;
        long rhs = x * x * x + a2 * x * x + a4 * x + a6;
        if ((lhs - rhs) % 2 == 0) ++n;
      }
    }
    return n;
  }
  long b2 = (a1 * a1 + 4 * a2) % p;
  long b4 = (2 * a4 + a1 * a3) % p;
  long b6 = (a3 * a3 + 4 * a6) % p;
  long n = p + 1;
  for (long x = 0; x < p; ++x) {
    long v = ((((4 * x + b2) % p) * x + 2 * b4) % p * x + b6) % p;
    n += legendre(v, p);
  }
  return n;
}

}  // namespace trident
