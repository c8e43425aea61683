// Exact Stanley depth of a squarefree monomial ideal by searching interval
// partitions of its characteristic poset.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "stanley/poset.hpp"

namespace stanley {

struct SearchStats {
  std::uint64_t nodes = 0;  // (bottom, top) candidate pairs tried
  double wall_ms = 0;
};

struct SearchOptions {
  // A proven upper bound on sdepth (e.g. a closed-form bound); the descending
  // scan starts at min(n, hint). 0 means none: start at n, which needs no
  // outside proof.
  int upper_bound_hint = 0;
  bool binary_search = false;
  // Remember covered-set signatures of failed subtrees. Off by default;
  // desk-scale posets rarely need it.
  bool memoize_failures = false;
  int threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int poset_cap = kDefaultPosetCap;
};

// Progress salvaged from an aborted computation: the best depth proven
// feasible (with its witness) and the smallest depth proven infeasible.
struct PartialResult {
  std::optional<int> best_feasible;
  IntervalPartition witness;
  std::optional<int> smallest_infeasible;
};

class DeadlineExceeded : public std::runtime_error {
 public:
  explicit DeadlineExceeded(PartialResult partial)
      : std::runtime_error("deadline exceeded"), partial(std::move(partial)) {}
  PartialResult partial;
};

struct Feasibility {
  bool exists = false;
  IntervalPartition witness;  // full partition of the poset when exists
};

// Decides whether some interval partition has every |D_i| >= d. Search space:
// every non-singleton interval gets a top of size exactly d, elements of rank
// above d stand alone, and elements of rank <= d form an exact-cover instance
// branched on the (rank, lex)-minimal uncovered subset.
Feasibility partition_exists(const CharacteristicPoset& poset, int d,
                             const SearchOptions& options = {},
                             SearchStats* stats = nullptr);

struct SdepthResult {
  int value = 0;
  IntervalPartition witness;
  SearchStats stats;
};

// max{ d : partition_exists(d) }, located by a descending scan from
// min(n, hint), or by bisection over [mindeg, n] with the binary_search flag
// (feasibility is monotone in d).
SdepthResult exact_sdepth(const SqfreeIdeal& ideal, const SearchOptions& options = {});

}  // namespace stanley
