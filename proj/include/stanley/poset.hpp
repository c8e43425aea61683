// The characteristic poset of a squarefree ideal (subsets of [n] containing
// some generator support, ordered by inclusion), interval partitions of it,
// and the induced Stanley decompositions.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stanley/core.hpp"

namespace stanley {

// Explicit enumeration past this needs more than 2^24 masks of memory; larger
// instances get closed-form bounds only.
inline constexpr int kDefaultPosetCap = 24;

// Elements are stored stratified by cardinality rank, each stratum sorted by
// index-sequence lex so witnesses come out deterministic.
struct CharacteristicPoset {
  int n = 0;
  SqfreeIdeal ideal;
  std::vector<std::vector<std::uint64_t>> strata;  // strata[r]: elements of rank r
  std::vector<std::size_t> stratum_offset;         // strata[r] starts at global index stratum_offset[r]

  std::size_t size() const;

  // Membership law, O(#generators) per query. Works for any mask, not just
  // enumerated elements.
  bool contains(std::uint64_t mask) const { return ideal.contains(Monomial(mask)); }

  // Global index of an enumerated element; throws if absent.
  std::size_t index_of(std::uint64_t mask) const;
  std::uint64_t element_at(std::size_t index) const;
};

CharacteristicPoset build_poset(const SqfreeIdeal& ideal, int cap = kDefaultPosetCap);

// [lower, upper] = all poset elements between the two (everything over lower
// is in the poset by upward closure, so the interval holds 2^{|upper\lower|}
// subsets).
struct Interval {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;

  friend bool operator==(Interval, Interval) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
};

struct PartitionViolation {
  enum class Kind { Malformed, DoublyCovered, Uncovered };
  Kind kind;
  std::uint64_t subset = 0;
  std::string message;
};

struct PartitionValidation {
  bool ok = true;
  std::vector<PartitionViolation> violations;
};

// Confirms the intervals are well formed, pairwise disjoint, and cover the
// poset exactly; violations are reported as values, not thrown.
PartitionValidation validate_partition(const CharacteristicPoset& poset,
                                       const IntervalPartition& partition);

// One Stanley space u·K[Z]: u has support `generator`, Z is the variable set
// `variables`.
struct StanleySpace {
  Monomial generator;
  std::uint64_t variables = 0;
};

struct StanleyDecomposition {
  std::vector<StanleySpace> spaces;

  // min |Z_i| over the spaces.
  int sdepth() const;
};

// Interval [C,D] becomes the space x^C · K[{x_k : k in D}]; throws on an
// invalid partition.
StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& partition);

}  // namespace stanley
