// Exact combinatorial primitives: squarefree monomials as packed index sets,
// ideals as minimal generator families, big-integer binomials, exact rationals.
#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stanley {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised for bad inputs (malformed ideals, out-of-range parameters, parse
// failures). The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Supports are packed subset masks, so the ambient ring is capped at 64
// variables (every instance of interest has n <= 40).
inline constexpr int kMaxVariables = 64;

// A squarefree monomial over x_1..x_n: bit i-1 of `mask` set iff x_i divides
// it. The empty mask is the monomial 1.
struct Monomial {
  std::uint64_t mask = 0;

  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t m) : mask(m) {}

  // 1-based indices; throws on duplicates or indices outside [1, 64].
  static Monomial from_indices(const std::vector<int>& indices);

  int degree() const { return std::popcount(mask); }
  bool is_one() const { return mask == 0; }
  bool divides(Monomial u) const { return (mask & u.mask) == mask; }
  Monomial lcm(Monomial u) const { return Monomial(mask | u.mask); }

  std::vector<int> indices() const;  // ascending, 1-based
  std::string str() const;           // "x1*x3"; "1" for the empty monomial

  friend bool operator==(Monomial, Monomial) = default;
};

// Lexicographic order on the ascending index sequences of two subsets,
// e.g. {1,4} < {2,3}. Total order on masks.
bool seq_lex_less(std::uint64_t a, std::uint64_t b);

// Canonical generator order: by degree, then index-sequence lex.
bool canonical_less(Monomial a, Monomial b);

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Formats a subset mask as "{1,3,4}" for diagnostics.
std::string subset_str(std::uint64_t mask);

// A squarefree monomial ideal given by its minimal generating set. Canonical
// form: generators sorted by (degree, index-sequence lex) and forming an
// antichain under divisibility. Build one through minimalize().
struct SqfreeIdeal {
  int n = 0;
  std::vector<Monomial> gens;

  // True iff some generator divides m.
  bool contains(Monomial m) const;
  int mindeg() const;

  // Canonical serialization "n=<int>: <gen>,<gen>,..."; this exact string is
  // the cache key used by the CLI.
  std::string serialize() const;

  friend bool operator==(const SqfreeIdeal&, const SqfreeIdeal&) = default;
};

// C(a,b), with C(a,b) = 0 whenever a < b. Exact at any size.
BigInt binomial(unsigned long a, unsigned long b);

// Builds the ideal generated by `gens`: validates supports, drops
// divisibility-dominated generators, sorts canonically. Idempotent. Rejects
// the zero ideal (empty input) and the unit ideal (a generator equal to 1).
SqfreeIdeal minimalize(std::vector<Monomial> gens, int n);

// I ∩ J via pairwise lcms, minimalized. Requires equal ambient n.
SqfreeIdeal intersect_ideals(const SqfreeIdeal& a, const SqfreeIdeal& b);

// num/den as a canonical rational; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt rational_floor(const Rational& q);

// Checked narrowing for report fields; throws if out of range.
long to_long(const BigInt& v);

}  // namespace stanley
