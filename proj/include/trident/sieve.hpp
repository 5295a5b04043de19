#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trident/family_uv.hpp"
#include "trident/json_io.hpp"

namespace trident {

/// Trace of Frobenius p + 1 - #E(F_p). Throws BadPrime when p divides the
/// discriminant or a coefficient denominator.
long ap(const CurveQ& E, long p);

/// S(N, E) = sum over good p <= N of (2 - a_p) / (p + 1 - a_p) * log p.
/// Bad primes are left out of the sum.
double mestre_nagao(const CurveQ& E, long N);

/// Placeholder for a root-number filter. Always throws Unsupported.
int root_number(const CurveQ& E);

struct SieveConfig {
  long u_num_max = 4, u_den_max = 3;
  long v_num_max = 4, v_den_max = 3;
  bool diag = false;  // only cells with u = v
  long n1 = 100, n2 = 1000;
  double s1_min = 6.0, s2_min = 20.0;
  bool certify = false;
  bool root_number_filter = false;
  int threads = 0;  // 0 keeps the OpenMP default
};

struct SieveRecord {
  Rat u, v;
  std::optional<double> S1, S2;
  bool pass1 = false, pass2 = false;
  std::optional<int> certified_bound;
  std::string skipped;  // reason when the cell is degenerate
};

/// Nonzero p/q in lowest terms with |p| <= num_max, 1 <= q <= den_max,
/// ordered by (q, p).
std::vector<Rat> grid_values(long num_max, long den_max);

/// Grid cells in output order: (den u, num u, den v, num v).
std::vector<std::pair<Rat, Rat>> enumerate_cells(const SieveConfig& cfg);

/// Integral model y^2 = x^3 + A x^2 + B x of the family curve at q.
CurveQ sieve_curve(const UVParams& q);

/// One cell through all stages. Degenerate parameters come back with
/// `skipped` set instead of an exception.
SieveRecord sieve_cell(const Rat& u, const Rat& v, const SieveConfig& cfg);

/// OpenMP over cells; output order does not depend on the thread count.
std::vector<SieveRecord> sieve_grid(const SieveConfig& cfg);
/// Single-threaded reference.
std::vector<SieveRecord> sieve_grid_serial(const SieveConfig& cfg);

json to_json(const SieveRecord& r);

}  // namespace trident
