// Closed-form Stanley-depth bounds for the ideal families, evaluated in exact
// rational arithmetic. Floors are taken on exact values only.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/families.hpp"

namespace stanley {

enum class BoundSource {
  KPARTITE_L24,
  EXTENSION_T29,
  HYPERGRAPH_T34,
  ISHAQ,
  MINDEG_LOWER,
};

const char* bound_source_name(BoundSource source);
// The result tag printed in reports ("Lemma 2.4", "Theorem 2.9", ...).
const char* bound_theorem_label(BoundSource source);

struct BoundReport {
  BoundSource source;
  bool is_upper = true;
  Rational exact_value;
  // floor(exact_value) for upper bounds; the value itself for lower bounds.
  long integer_bound = 0;
  // For EXTENSION_T29: the Lemma-2.4 integer bound A and the naive comparison
  // bound A + p.
  std::optional<long> lemma_A;
  std::optional<long> naive_bound;
  std::string inputs;
  std::vector<std::string> warnings;
};

// sdepth(I) <= 2 + (C(n,3) - sum C(r_i,3)) / (sum_{i<j} r_i r_j).
BoundReport kpartite_upper_bound(const KPartiteSpec& spec);

// sdepth(I') <= 2 + (C(n,3) - sum C(r_i,3) + C(p,3) + n C(p,2) + p C(n,2))
//                 / (sum r_i r_j + np + C(p,2) - p(A+p-1)/2),
// with A the Lemma-2.4 integer bound. p = 0 reproduces kpartite_upper_bound.
// forced_A overrides A for experimentation; a nonpositive denominator (only
// reachable that way) raises "vacuous bound".
BoundReport extension_upper_bound(const KPartiteSpec& spec, int p,
                                  std::optional<long> forced_A = std::nullopt);

// s <= sdepth(I_s) <= s + M/N with N = C(v,s) - C(v1,s) - C(v2,s) and
// M = C(v,s+1) - C(v1,s+1) - C(v2,s+1). Returns (lower, upper).
std::pair<BoundReport, BoundReport> hypergraph_bounds(const HypergraphSpec& spec);

// sdepth(I) <= (n+2)/2 for the edge ideal of a complete bipartite graph on
// n >= 4 vertices.
BoundReport ishaq_bipartite_bound(int n);

// The generic lower bound sdepth(I) >= mindeg(I).
BoundReport mindeg_lower_bound(const SqfreeIdeal& ideal);

}  // namespace stanley
