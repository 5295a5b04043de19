#include "trident/sieve.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <numeric>

namespace trident {

long ap(const CurveQ& E, long p) { return p + 1 - count_points_mod_p(E, p); }

double mestre_nagao(const CurveQ& E, long N) {
  if (N < 2) return 0.0;
  double s = 0.0;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(N))) {
    long a;
    try {
      a = ap(E, p);
    } catch (const BadPrime&) {
      continue;
    }
    double lp = std::log(static_cast<double>(p));
    s += static_cast<double>(2 - a) / static_cast<double>(static_cast<long>(p) + 1 - a) * lp;
  }
  return s;
}

int root_number(const CurveQ&) { throw Unsupported("root numbers are not implemented"); }

std::vector<Rat> grid_values(long num_max, long den_max) {
  std::vector<Rat> out;
  for (long q = 1; q <= den_max; ++q) {
    for (long p = -num_max; p <= num_max; ++p) {
      if (p == 0 || std::gcd(p, q) != 1) continue;
      out.push_back(make_rat(p, q));
    }
  }
  return out;
}

std::vector<std::pair<Rat, Rat>> enumerate_cells(const SieveConfig& cfg) {
  std::vector<std::pair<Rat, Rat>> cells;
  std::vector<Rat> us = grid_values(cfg.u_num_max, cfg.u_den_max);
  if (cfg.diag) {
    for (const Rat& u : us) {
      if (u.get_num() <= cfg.v_num_max && -u.get_num() <= cfg.v_num_max && u.get_den() <= cfg.v_den_max) {
        cells.emplace_back(u, u);
      }
    }
    return cells;
  }
  std::vector<Rat> vs = grid_values(cfg.v_num_max, cfg.v_den_max);
  cells.reserve(us.size() * vs.size());
  for (const Rat& u : us) {
    for (const Rat& v : vs) cells.emplace_back(u, v);
  }
  return cells;
}

CurveQ sieve_curve(const UVParams& q) {
  auto [A, B] = uv_model_coefficients(q);
  Int l;
  mpz_lcm(l.get_mpz_t(), A.get_den_mpz_t(), B.get_den_mpz_t());
  Rat l2 = Rat(l * l);
  return CurveQ::from_ab(A * l2, B * l2 * l2);
}

SieveRecord sieve_cell(const Rat& u, const Rat& v, const SieveConfig& cfg) {
  SieveRecord r{u, v, std::nullopt, std::nullopt, false, false, std::nullopt, ""};
  UVParams q{u, v};
  std::optional<CurveQ> E;
  try {
    validate_uv(q);
    E = sieve_curve(q);
  } catch (const MathError& e) {
    r.skipped = e.what();
    return r;
  }
  if (cfg.root_number_filter && root_number(*E) != 1) return r;
  r.S1 = mestre_nagao(*E, cfg.n1);
  r.pass1 = *r.S1 >= cfg.s1_min;
  if (!r.pass1) return r;
  r.S2 = mestre_nagao(*E, cfg.n2);
  r.pass2 = *r.S2 >= cfg.s2_min;
  if (r.pass2 && cfg.certify) r.certified_bound = uv_certify(q).bound;
  return r;
}

std::vector<SieveRecord> sieve_grid(const SieveConfig& cfg) {
  auto cells = enumerate_cells(cfg);
  std::vector<SieveRecord> out(cells.size());
  std::exception_ptr err;
  int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = sieve_cell(cells[i].first, cells[i].second, cfg);
    } catch (...) {
#pragma omp critical(trident_sieve_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

json to_json(const SieveRecord& r) {
  json j;
  j["u"] = to_json(r.u);
  j["v"] = to_json(r.v);
  if (!r.skipped.empty()) {
    j["skipped"] = r.skipped;
    return j;
  }
  j["S1"] = r.S1 ? json(*r.S1) : json(nullptr);
  j["S2"] = r.S2 ? json(*r.S2) : json(nullptr);
  j["pass1"] = r.pass1;
  j["pass2"] = r.pass2;
  j["certified_bound"] = r.certified_bound ? json(*r.certified_bound) : json(nullptr);
  return j;
}

}  // namespace trident
