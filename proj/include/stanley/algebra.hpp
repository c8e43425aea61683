// Associated primes of the k-partite edge ideal, an independent minimal-prime
// oracle, big size, a homology-based depth oracle, and the resulting
// Stanley-conjecture certificate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stanley/families.hpp"

namespace stanley {

// A monomial prime (x_j : j in variables).
struct PrimeIdeal {
  std::uint64_t variables = 0;

  int size() const { return std::popcount(variables); }
  std::string str() const;  // "(x1,x2)"
  SqfreeIdeal as_ideal(int n) const;

  friend bool operator==(PrimeIdeal, PrimeIdeal) = default;
};

// Closed form: P_i is generated by every variable outside block i.
std::vector<PrimeIdeal> kpartite_associated_primes(const KPartiteSpec& spec);

// Independent oracle: inclusion-minimal variable sets hitting every generator
// support (minimal vertex covers), enumerated exhaustively. n <= 20.
std::vector<PrimeIdeal> minimal_primes(const SqfreeIdeal& ideal);

struct ColonStep {
  std::string description;
  std::string claimed;   // canonical serialization the argument predicts
  std::string computed;  // what the colon/intersection machinery produced
};

// Replays the primary-decomposition argument step by step: block-leading
// colons (J : x) = P_i, residuals after absorbing each block, and the final
// intersection P_1 ∩ ... ∩ P_k = I. Throws naming the step if any computed
// ideal differs from the claimed one. n <= 16.
std::vector<ColonStep> colon_trace(const KPartiteSpec& spec);

// Minimal t < #primes such that every (t+1)-subset of the primes has variable
// union [n]; throws "big size undefined" when no such t exists.
int big_size(const std::vector<PrimeIdeal>& primes, int n);

struct AssPrimesReport {
  std::vector<PrimeIdeal> primes;
  int big_size_value = 0;
  bool decomposition_verified = false;  // intersection of the primes equals I
};

AssPrimesReport kpartite_ass_report(const KPartiteSpec& spec);

struct DepthReport {
  int field_char = 2;  // 0 or 2
  int projective_dimension = 0;
  int depth_quotient = 0;  // depth of S/I
  int depth_ideal = 0;     // depth of I as a module = depth_quotient + 1
};

// Depth of S/I through the Stanley-Reisner correspondence: reduced homology
// of every induced subcomplex gives the multigraded Betti contributions,
// projective dimension is the largest homological degree with one, and
// depth = n - pd. Characteristic 2 uses bit linear algebra, characteristic 0
// exact fraction-free elimination. n <= 12.
DepthReport depth_quotient(const SqfreeIdeal& ideal, int field_char);

struct StanleyCertificate {
  std::string family;
  int big_size_value = 0;
  bool big_size_ok = false;  // big size == 1, the certificate's premise
  // Numeric desk-scale check, attached when n <= 8: sdepth(I) >= depth(I).
  bool numeric_checked = false;
  std::optional<int> sdepth_value;
  std::optional<int> depth_ideal_char2;
  std::optional<int> depth_ideal_char0;
  bool numeric_ok = true;
  bool certified = false;
  std::vector<std::string> warnings;
};

StanleyCertificate stanley_certificate(const KPartiteSpec& spec);

}  // namespace stanley
