#include "trident/arith.hpp"

#include <algorithm>

namespace trident {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

namespace {

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw std::invalid_argument("empty integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

std::string to_string(const Int& n) { return n.get_str(10); }

std::string to_string(const Rat& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::optional<Int> int_sqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("int_sqrt of a negative integer");
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Rat> is_square_rat(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto num = int_sqrt(q.get_num());
  if (!num) return std::nullopt;
  auto den = int_sqrt(q.get_den());
  if (!den) return std::nullopt;
  return make_rat(*num, *den);
}

std::optional<Rat> rat_root(const Rat& q, unsigned long k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  if (q < 0 && k % 2 == 0) return std::nullopt;
  Int n = abs(q.get_num()), d = q.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return std::nullopt;
  if (q < 0) rn = -rn;
  return make_rat(rn, rd);
}

// ---------------------------------------------------------------------------
// CoprimeBasis

void CoprimeBasis::extend(const Int& value) {
  if (value == 0) throw std::invalid_argument("coprime basis of zero");
  std::vector<Int> work{abs(value)};
  while (!work.empty()) {
    Int x = std::move(work.back());
    work.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      Int g = gcd(x, elements_[i]);
      if (g == 1) continue;
      // Replace b and x by b/g, g, x/g. The product of everything pending
      // strictly drops by g, so this terminates.
      Int b = std::move(elements_[i]);
      elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(i));
      work.push_back(b / g);
      work.push_back(g);
      work.push_back(x / g);
      split = true;
      break;
    }
    if (split) continue;
    // Perfect squares would make odd exponents lie about square classes.
    while (auto r = int_sqrt(x)) x = *r;
    elements_.push_back(std::move(x));
  }
}

void CoprimeBasis::extend(std::span<const Int> values) {
  for (const Int& v : values) extend(v);
}

std::vector<unsigned long> CoprimeBasis::exponents(const Int& value) const {
  if (value == 0) throw std::invalid_argument("exponents of zero");
  Int rest = abs(value);
  std::vector<unsigned long> out(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size() && rest != 1; ++i) {
    out[i] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), elements_[i].get_mpz_t());
  }
  if (rest != 1) {
    throw IncompleteBasis("value does not factor over the coprime basis (cofactor " +
                          to_string(rest) + ")");
  }
  return out;
}

bool CoprimeBasis::factors(const Int& value) const {
  try {
    exponents(value);
    return true;
  } catch (const IncompleteBasis&) {
    return false;
  }
}

CoprimeBasis coprime_basis(std::span<const Int> values) { return CoprimeBasis(values); }

// ---------------------------------------------------------------------------
// SquareClass

bool SquareClass::is_identity() const {
  return sign == 1 && std::none_of(parities.begin(), parities.end(), [](bool b) { return b; });
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  if (parities.size() != other.parities.size()) {
    throw std::invalid_argument("square classes over different bases");
  }
  SquareClass out;
  out.sign = sign * other.sign;
  out.parities.resize(parities.size());
  for (std::size_t i = 0; i < parities.size(); ++i) out.parities[i] = parities[i] != other.parities[i];
  return out;
}

SquareClass square_class(const Rat& q, const CoprimeBasis& basis) {
  if (q == 0) throw MathError("square class of zero");
  auto num = basis.exponents(q.get_num());
  auto den = basis.exponents(q.get_den());
  SquareClass c;
  c.sign = q < 0 ? -1 : 1;
  c.parities.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c.parities[i] = ((num[i] + den[i]) & 1U) != 0;
  return c;
}

// ---------------------------------------------------------------------------
// Small primes and characters

int legendre(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // Jacobi symbol by quadratic reciprocity; equals Legendre for prime p.
  int result = 1;
  std::int64_t n = p;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::int64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(const Int& a, std::int64_t p) {
  return legendre(static_cast<std::int64_t>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p))), p);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace trident
