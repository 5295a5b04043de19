#include "trident/descent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace trident {

CoprimeBasis descent_basis(const SplitCurve& S, const std::vector<PointQ>& points) {
  CoprimeBasis basis;
  auto feed = [&basis](const Rat& q) {
    if (q == 0) return;
    basis.extend(q.get_num());
    basis.extend(q.get_den());
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) feed(S.root(i) - S.root(j));
  }
  for (const PointQ& P : points) {
    if (P.inf) continue;
    for (int i = 0; i < 3; ++i) feed(P.x - S.root(i));
  }
  return basis;
}

DescentImage descent_image(const SplitCurve& S, const PointQ& P, const CoprimeBasis& basis) {
  if (!on_curve(S.curve(), P)) throw MathError("descent_image: point not on the curve");
  DescentImage img;
  img.first.parities.assign(basis.size(), false);
  img.second.parities.assign(basis.size(), false);
  if (P.inf) return img;
  img.first = P.x == S.e1 ? square_class((S.e1 - S.e2) * (S.e1 - S.e3), basis) : square_class(P.x - S.e1, basis);
  img.second = P.x == S.e2 ? square_class((S.e2 - S.e1) * (S.e2 - S.e3), basis) : square_class(P.x - S.e2, basis);
  return img;
}

std::vector<bool> image_row(const DescentImage& img) {
  std::vector<bool> row;
  row.reserve(2 * img.first.parities.size() + 2);
  row.push_back(img.first.sign < 0);
  row.insert(row.end(), img.first.parities.begin(), img.first.parities.end());
  row.push_back(img.second.sign < 0);
  row.insert(row.end(), img.second.parities.begin(), img.second.parities.end());
  return row;
}

namespace {

void xor_into(std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] != b[i];
}

int first_set(const std::vector<bool>& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i]) return static_cast<int>(i);
  }
  return -1;
}

struct Pivot {
  int col;
  std::vector<bool> row;
  std::vector<bool> combo;
};

// Reduces (row, combo) against the pivots; true when the row survives.
bool reduce(const std::vector<Pivot>& pivots, std::vector<bool>& row, std::vector<bool>& combo) {
  for (const Pivot& p : pivots) {
    if (row[static_cast<std::size_t>(p.col)]) {
      xor_into(row, p.row);
      xor_into(combo, p.combo);
    }
  }
  return first_set(row) >= 0;
}

std::vector<DescentImage> images_parallel(const SplitCurve& S, const std::vector<PointQ>& pts,
                                          const CoprimeBasis& basis) {
  std::vector<DescentImage> out(pts.size());
  std::exception_ptr err;
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = descent_image(S, pts[static_cast<std::size_t>(i)], basis);
    } catch (...) {
#pragma omp critical(trident_descent_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<DescentImage> images_serial(const SplitCurve& S, const std::vector<PointQ>& pts,
                                        const CoprimeBasis& basis) {
  std::vector<DescentImage> out;
  out.reserve(pts.size());
  for (const PointQ& P : pts) out.push_back(descent_image(S, P, basis));
  return out;
}

struct Reduction {
  std::vector<std::vector<bool>> rows, torsion_rows;
  std::vector<Int> basis;
  int torsion_rank = 0, bound = 0;
  std::vector<bool> combo;  // first dependent combination, empty if none
  std::size_t failing = 0;
};

template <class ImageFn>
Reduction reduce_points(const SplitCurve& S, const std::vector<PointQ>& points, const std::vector<PointQ>& torsion,
                        ImageFn images) {
  Reduction out;
  std::vector<PointQ> all = points;
  all.insert(all.end(), torsion.begin(), torsion.end());
  CoprimeBasis basis = descent_basis(S, all);
  out.basis = basis.elements();
  for (const DescentImage& img : images(S, points, basis)) out.rows.push_back(image_row(img));
  for (const DescentImage& img : images(S, torsion, basis)) out.torsion_rows.push_back(image_row(img));

  const std::size_t n = points.size();
  std::vector<Pivot> pivots;
  for (const auto& t : out.torsion_rows) {
    std::vector<bool> row = t, combo(n, false);
    if (reduce(pivots, row, combo)) {
      pivots.push_back({first_set(row), row, combo});
      ++out.torsion_rank;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row = out.rows[i], combo(n, false);
    combo[i] = true;
    if (reduce(pivots, row, combo)) {
      pivots.push_back({first_set(row), row, combo});
      ++out.bound;
    } else if (out.combo.empty()) {
      out.combo = combo;
      out.failing = i;
    }
  }
  return out;
}

constexpr int kMaxHalvings = 16;

template <class ImageFn>
IndependenceCertificate certify(const SplitCurve& S, const std::vector<PointQ>& points, const std::string& id,
                                ImageFn images) {
  CurveQ E = S.curve();
  for (const PointQ& P : points) {
    if (!on_curve(E, P)) throw MathError("independence_bound: point not on the curve");
  }
  IndependenceCertificate cert{id, S, points, {}, points, torsion_subgroup(E), {}, {}, {}, 0, 0, {}, std::nullopt};
  const std::size_t n = points.size();

  for (int round = 0;; ++round) {
    Reduction red = reduce_points(S, cert.points, cert.torsion, images);
    cert.basis = std::move(red.basis);
    cert.rows = std::move(red.rows);
    cert.torsion_rows = std::move(red.torsion_rows);
    cert.torsion_rank = red.torsion_rank;
    cert.bound = red.bound;
    cert.dependency.clear();
    cert.dependency_is_torsion.reset();
    if (red.combo.empty()) break;

    PointQ sum = PointQ::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (!red.combo[k]) continue;
      cert.dependency.push_back(static_cast<int>(k));
      sum = add(E, sum, cert.points[k]);
    }
    cert.dependency_is_torsion = is_torsion(E, sum);
    if (*cert.dependency_is_torsion || round == kMaxHalvings) break;

    // The image of sum lies in the torsion image, and the descent map is
    // injective on E(Q)/2E(Q), so sum + T is divisible by 2 for some T.
    std::optional<Halving> step;
    for (const PointQ& T : cert.torsion) {
      PointQ target = add(E, sum, T);
      if (auto Q = halve(S, target)) {
        step = Halving{cert.dependency, T, target, *Q, static_cast<int>(red.failing)};
        break;
      }
    }
    if (!step) throw std::logic_error("descent: dependent sum has no half modulo torsion");
    cert.points[red.failing] = step->half;
    cert.halvings.push_back(std::move(*step));
  }
  return cert;
}

}  // namespace

int f2_rank(const std::vector<std::vector<bool>>& rows) {
  std::vector<Pivot> pivots;
  for (const auto& r : rows) {
    std::vector<bool> row = r, combo;
    if (reduce(pivots, row, combo)) pivots.push_back({first_set(row), row, {}});
  }
  return static_cast<int>(pivots.size());
}

IndependenceCertificate independence_bound(const SplitCurve& S, const std::vector<PointQ>& points,
                                           const std::string& curve_id) {
  return certify(S, points, curve_id, images_parallel);
}

IndependenceCertificate independence_bound_serial(const SplitCurve& S, const std::vector<PointQ>& points,
                                                  const std::string& curve_id) {
  return certify(S, points, curve_id, images_serial);
}

IndependenceCertificate independence_bound(const CurveQ& E, const std::vector<PointQ>& points,
                                           const std::string& curve_id) {
  SplitModel sm = split_form(E);
  std::vector<PointQ> mapped;
  mapped.reserve(points.size());
  for (const PointQ& P : points) {
    if (!on_curve(E, P)) throw MathError("independence_bound: point not on the curve");
    mapped.push_back(sm.map.forward(P));
  }
  return independence_bound(sm.split, mapped, curve_id);
}

std::optional<PointQ> halve(const SplitCurve& S, const PointQ& P) {
  CurveQ E = S.curve();
  if (!on_curve(E, P)) throw MathError("halve: point not on the curve");
  if (P.inf) return PointQ::infinity();
  std::array<Rat, 3> r;
  for (int i = 0; i < 3; ++i) {
    auto q = is_square_rat(P.x - S.root(i));
    if (!q) return std::nullopt;
    r[static_cast<std::size_t>(i)] = *q;
  }
  for (int signs = 0; signs < 8; ++signs) {
    Rat a = (signs & 1) ? -r[0] : r[0];
    Rat b = (signs & 2) ? -r[1] : r[1];
    Rat c = (signs & 4) ? -r[2] : r[2];
    Rat x = P.x + a * b + a * c + b * c;
    auto y = is_square_rat((x - S.e1) * (x - S.e2) * (x - S.e3));
    if (!y) continue;
    for (const Rat& yy : {*y, Rat(-*y)}) {
      PointQ Q(x, yy);
      if (add(E, Q, Q) == P) return Q;
    }
  }
  return std::nullopt;
}

bool verify_halvings(const IndependenceCertificate& cert) {
  CurveQ E = cert.split.curve();
  std::vector<PointQ> work = cert.input_points;
  for (const Halving& h : cert.halvings) {
    PointQ sum = h.torsion;
    for (int k : h.combo) {
      if (k < 0 || k >= static_cast<int>(work.size())) return false;
      sum = add(E, sum, work[static_cast<std::size_t>(k)]);
    }
    if (!(sum == h.sum) || !(add(E, h.half, h.half) == h.sum)) return false;
    if (!is_torsion(E, h.torsion)) return false;
    if (h.replaced < 0 || h.replaced >= static_cast<int>(work.size())) return false;
    if (std::find(h.combo.begin(), h.combo.end(), h.replaced) == h.combo.end()) return false;
    work[static_cast<std::size_t>(h.replaced)] = h.half;
  }
  return work == cert.points;
}

bool verify_certificate_algebra(const IndependenceCertificate& cert) {
  std::vector<std::vector<bool>> all = cert.torsion_rows;
  all.insert(all.end(), cert.rows.begin(), cert.rows.end());
  int tr = f2_rank(cert.torsion_rows);
  return tr == cert.torsion_rank && f2_rank(all) - tr == cert.bound &&
         cert.bound <= static_cast<int>(cert.points.size());
}

// ---------------------------------------------------------------------------
// Heights

namespace {

double log_abs(const Int& n) {
  if (n == 0) return 0.0;
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

double log_height(const Rat& q) { return std::max(log_abs(q.get_num()), log_abs(q.get_den())); }

std::optional<double> canonical_height(const CurveQ& E, const PointQ& P, int n) {
  if (n < 1) throw std::invalid_argument("canonical_height: doubling depth must be >= 1");
  if (is_torsion(E, P)) return std::nullopt;
  PointQ Q = P;
  for (int i = 0; i < n; ++i) {
    Q = add(E, Q, Q);
    if (Q.inf) return std::nullopt;
  }
  return log_height(Q.x) / std::pow(4.0, n);
}

double regulator_heuristic(const CurveQ& E, const std::vector<PointQ>& points, int n) {
  const std::size_t k = points.size();
  std::vector<double> h(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto v = canonical_height(E, points[i], n);
    if (!v) throw MathError("regulator_heuristic: torsion point");
    h[i] = *v;
  }
  std::vector<std::vector<long double>> M(k, std::vector<long double>(k, 0.0L));
  for (std::size_t i = 0; i < k; ++i) {
    M[i][i] = h[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      double hs = canonical_height(E, add(E, points[i], points[j]), n).value_or(0.0);
      M[i][j] = M[j][i] = (hs - h[i] - h[j]) / 2.0;
    }
  }
  long double det = 1.0L;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::fabs(M[r][c]) > std::fabs(M[piv][c])) piv = r;
    }
    if (M[piv][c] == 0.0L) return 0.0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      long double f = M[r][c] / M[c][c];
      for (std::size_t cc = c; cc < k; ++cc) M[r][cc] -= f * M[c][cc];
    }
  }
  return static_cast<double>(det);
}

}  // namespace trident
