#include "stanley/core.hpp"

#include <algorithm>

namespace stanley {

Monomial Monomial::from_indices(const std::vector<int>& indices) {
  Monomial m;
  for (int i : indices) {
    if (i < 1 || i > kMaxVariables)
      throw ValidationError("variable index " + std::to_string(i) +
                            " outside [1, " + std::to_string(kMaxVariables) + "]");
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (m.mask & bit)
      throw ValidationError("duplicate variable x" + std::to_string(i) +
                            " in squarefree monomial");
    m.mask |= bit;
  }
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint64_t m = mask; m; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(std::countr_zero(m) + 1);
  }
  return out;
}

bool seq_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;  // a is a proper prefix of b
}

bool canonical_less(Monomial a, Monomial b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return seq_lex_less(a.mask, b.mask);
}

std::string subset_str(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(m) + 1);
    first = false;
  }
  return out + "}";
}

bool SqfreeIdeal::contains(Monomial m) const {
  for (const Monomial& g : gens)
    if (g.divides(m)) return true;
  return false;
}

int SqfreeIdeal::mindeg() const {
  // gens are sorted by degree first
  return gens.empty() ? 0 : gens.front().degree();
}

std::string SqfreeIdeal::serialize() const {
  std::string out = "n=" + std::to_string(n) + ": ";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].str();
  }
  return out;
}

BigInt binomial(unsigned long a, unsigned long b) {
  if (b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

SqfreeIdeal minimalize(std::vector<Monomial> gens, int n) {
  if (n < 1 || n > kMaxVariables)
    throw ValidationError("ambient variable count n=" + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxVariables) + "]");
  if (gens.empty())
    throw ValidationError("zero ideal unsupported (no generators)");
  std::uint64_t ambient = full_mask(n);
  for (const Monomial& g : gens) {
    if (g.is_one())
      throw ValidationError("unit ideal unsupported (generator 1)");
    if (g.mask & ~ambient)
      throw ValidationError("generator " + g.str() + " uses a variable beyond x" +
                            std::to_string(n));
  }

  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Divisibility scan: a generator is dropped iff a strictly smaller-degree
  // one divides it (equal-degree distinct sets never contain each other).
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& h : kept) {
      if (h.degree() >= g.degree()) break;  // kept is degree-sorted
      if (h.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return SqfreeIdeal{n, std::move(kept)};
}

SqfreeIdeal intersect_ideals(const SqfreeIdeal& a, const SqfreeIdeal& b) {
  if (a.n != b.n)
    throw ValidationError("cannot intersect ideals with different ambient sizes (" +
                          std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
  std::vector<Monomial> prods;
  prods.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) prods.push_back(g.lcm(h));
  return minimalize(std::move(prods), a.n);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt rational_floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p())
    throw ValidationError("integer value out of range for report field");
  return v.get_si();
}

}  // namespace stanley
