#include "trident/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace trident {

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int deg) {
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i > degree()) return zero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& k) const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= k;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem(c_);
  int dd = d.degree();
  int n = degree();
  std::vector<Rat> quo(n >= dd ? static_cast<std::size_t>(n - dd + 1) : 0, Rat(0));
  Rat inv = 1 / d.lead();
  for (int k = n; k >= dd; --k) {
    Rat f = rem[static_cast<std::size_t>(k)] * inv;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly Poly::primitive() const {
  if (c_.empty()) return {};
  Int den(1), num(0);
  for (const auto& x : c_) den = lcm(den, x.get_den());
  for (const auto& x : c_) num = gcd(num, x.get_num() * (den / x.get_den()));
  return *this * make_rat(den, num);
}

std::vector<Int> Poly::integer_coeffs() const {
  Poly p = primitive();
  std::vector<Int> out;
  out.reserve(p.c_.size());
  for (const auto& x : p.c_) out.push_back(x.get_num());
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = r.primitive();
  }
  if (a.is_zero()) return a;
  return a * (1 / a.lead());
}

namespace {

using IntPoly = std::vector<Int>;

// Sign of sum c_i (num/den)^i, den > 0.
int sign_at(const IntPoly& c, const Int& num, const Int& den) {
  Int acc(0), denpow(1);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * num + *it * denpow;
    denpow *= den;
  }
  return sgn(acc);
}

class Sturm {
 public:
  explicit Sturm(const Poly& squarefree) {
    Poly a = squarefree.primitive();
    Poly b = a.derivative().primitive();
    seq_.push_back(a.integer_coeffs());
    while (!b.is_zero()) {
      seq_.push_back(b.integer_coeffs());
      Poly q, r;
      a.divmod(b, q, r);
      a = b;
      b = (-r).primitive();
    }
  }

  int variations(const Int& num, const Int& den) const {
    int count = 0, last = 0;
    for (const auto& p : seq_) {
      int s = sign_at(p, num, den);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Variations at the half integer k + 1/2.
  int at_half(const Int& k) const { return variations(2 * k + 1, Int(2)); }

 private:
  std::vector<IntPoly> seq_;
};

void integer_roots_in(const Sturm& st, const IntPoly& g, const Int& lo, const Int& hi, int vlo, int vhi,
                      std::vector<Int>& out) {
  // vlo = V(lo - 1/2), vhi = V(hi + 1/2); real roots in the window = vlo - vhi.
  if (vlo - vhi <= 0) return;
  if (lo == hi) {
    if (sign_at(g, lo, Int(1)) == 0) out.push_back(lo);
    return;
  }
  Int mid = lo + (hi - lo) / 2;
  int vmid = st.at_half(mid);
  integer_roots_in(st, g, lo, mid, vlo, vmid, out);
  integer_roots_in(st, g, mid + 1, hi, vmid, vhi, out);
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Rat> roots;
  Poly p = f;
  if (p.degree() >= 1 && p.coeff(0) == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (p.coeffs()[k] == 0) ++k;
    p = Poly(std::vector<Rat>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
  }
  if (p.degree() >= 1) {
    Poly g = p.derivative();
    Poly h = poly_gcd(p, g);
    Poly q, r;
    p.divmod(h, q, r);
    IntPoly c = q.integer_coeffs();
    int d = static_cast<int>(c.size()) - 1;
    const Int cd = c.back();
    // Monic rescaling X = cd x: coefficient of X^k is c_k cd^(d-1-k).
    IntPoly m(c.size());
    Int pw(1);
    for (int k = d - 1; k >= 0; --k) {
      m[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] * pw;
      pw *= cd;
    }
    m[static_cast<std::size_t>(d)] = 1;
    // Fujiwara bound: every root has |X| <= 2 max_k |m_{d-k}|^(1/k).
    Int bound(1);
    for (int k = 1; k <= d; ++k) {
      Int a = abs(m[static_cast<std::size_t>(d - k)]);
      Int rt;
      mpz_root(rt.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
      bound = std::max(bound, Int(rt + 1));
    }
    bound *= 2;
    std::vector<Rat> mono(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mono[i] = Rat(m[i]);
    Sturm st{Poly(mono)};
    std::vector<Int> xs;
    Int lo = -bound, hi = bound;
    integer_roots_in(st, m, lo, hi, st.at_half(lo - 1), st.at_half(hi), xs);
    for (const Int& X : xs) roots.push_back(make_rat(X, cd));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace trident
