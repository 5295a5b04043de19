#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trident/curve.hpp"
#include "trident/poly.hpp"

namespace trident {

namespace {

// f_n = psi_n for odd n and psi_n / (2y) for even n, on y^2 = x^3 + Ax + B.
class DivisionPolys {
 public:
  DivisionPolys(const Int& A, const Int& B) {
    Rat a(A), b(B);
    G_ = Poly{4 * b, 4 * a, Rat(0), Rat(4)};
    G2_ = G_ * G_;
    memo_[0] = Poly{};
    memo_[1] = Poly{Rat(1)};
    memo_[2] = Poly{Rat(1)};
    memo_[3] = Poly{-a * a, 12 * b, 6 * a, Rat(0), Rat(3)};
    memo_[4] = Poly{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, Rat(0), Rat(1)} * Rat(2);
  }

  const Poly& get(int n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    Poly out;
    int m = n / 2;
    if (n % 2 == 1) {
      Poly fm3 = get(m) * get(m) * get(m);
      Poly fm13 = get(m + 1) * get(m + 1) * get(m + 1);
      if (m % 2 == 0) {
        out = G2_ * get(m + 2) * fm3 - get(m - 1) * fm13;
      } else {
        out = get(m + 2) * fm3 - G2_ * get(m - 1) * fm13;
      }
    } else {
      out = get(m) * (get(m + 2) * get(m - 1) * get(m - 1) - get(m - 2) * get(m + 1) * get(m + 1));
    }
    return memo_[n] = std::move(out);
  }

 private:
  Poly G_, G2_;
  std::map<int, Poly> memo_;
};

bool point_less(const PointQ& a, const PointQ& b) {
  if (a.inf != b.inf) return a.inf;
  if (a.inf) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

long torsion_bound(const CurveQ& W) {
  long m = 0;
  int used = 0;
  for (std::uint32_t p : primes_up_to(2000)) {
    if (p < 5) continue;
    long n;
    try {
      n = count_points_mod_p(W, p);
    } catch (const BadPrime&) {
      continue;
    }
    m = std::gcd(m, n);
    if (++used >= 30) break;
  }
  if (used == 0) throw std::logic_error("no good primes for torsion bound");
  return m;
}

void insert_unique(std::vector<PointQ>& pts, const PointQ& P) {
  if (std::find(pts.begin(), pts.end(), P) == pts.end()) pts.push_back(P);
}

}  // namespace

std::vector<PointQ> torsion_subgroup(const CurveQ& E) {
  ShortModel sm = short_integral_model(E);
  CurveQ W = sm.curve();
  long bound = torsion_bound(W);

  std::vector<PointQ> group{PointQ::infinity()};
  for (const Rat& e : rational_roots(Poly{Rat(sm.B), Rat(sm.A), Rat(0), Rat(1)})) group.emplace_back(e, Rat(0));

  if (static_cast<long>(group.size()) != bound) {
    DivisionPolys f(sm.A, sm.B);
    for (int n : {3, 4, 5, 7, 8, 9}) {
      if (bound % n != 0) continue;
      for (const Rat& x : rational_roots(f.get(n))) {
        if (!is_integral(x)) continue;
        Rat y2 = (x * x + Rat(sm.A)) * x + Rat(sm.B);
        auto y = is_square_rat(y2);
        if (!y) continue;
        insert_unique(group, PointQ(x, *y));
        insert_unique(group, PointQ(x, -*y));
      }
    }
    // Close under addition; the group law keeps everything torsion.
    for (bool grew = true; grew;) {
      grew = false;
      std::size_t n = group.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          PointQ s = add(W, group[i], group[j]);
          if (std::find(group.begin(), group.end(), s) == group.end()) {
            group.push_back(s);
            grew = true;
          }
        }
      }
      if (group.size() > 16) throw std::logic_error("torsion closure exceeded the Mazur bound");
    }
  }
  for (const PointQ& P : group) {
    if (!is_torsion(W, P)) throw std::logic_error("torsion candidate of infinite order");
  }

  std::vector<PointQ> out;
  out.reserve(group.size());
  WeierstrassMap back = sm.map;
  for (const PointQ& P : group) out.push_back(back.backward(P));
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

bool is_torsion(const CurveQ& E, const PointQ& P) {
  if (!on_curve(E, P)) throw MathError("is_torsion: point not on the curve");
  if (P.inf) return true;
  ShortModel sm = short_integral_model(E);
  CurveQ W = sm.curve();
  PointQ Q0 = sm.map.forward(P);
  PointQ Q = Q0;
  for (int k = 1; k <= 12; ++k) {
    if (Q.inf) return true;
    // Nagell-Lutz: on an integral short model torsion points are integral.
    if (!is_integral(Q.x) || !is_integral(Q.y)) return false;
    Q = add(W, Q, Q0);
  }
  return false;
}

}  // namespace trident
