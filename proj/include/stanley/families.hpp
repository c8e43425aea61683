// The three ideal families under study: complete k-partite edge ideals,
// s-uniform complete bipartite hypergraph edge ideals, and variable
// extensions I' = (I, x_{n+1},...,x_{n+p}).
#pragma once

#include <string>
#include <vector>

#include "stanley/core.hpp"

namespace stanley {

// Part sizes r_1 <= ... <= r_k; vertices split into consecutive index blocks
// block 1 = {1..r_1}, block 2 = {r_1+1..r_1+r_2}, ...
struct KPartiteSpec {
  std::vector<int> parts;
  // The closed-form bounds assume 2 <= r_1; r_1 = 1 is still evaluated but
  // flagged, and the flag propagates into bound report warnings.
  bool r1_below_assumption = false;

  // Sorts parts nondecreasing and validates (k >= 2, r_i >= 1, n <= 64).
  static KPartiteSpec create(std::vector<int> parts);

  int k() const { return static_cast<int>(parts.size()); }
  int n() const;
  // First variable index of 1-based block i.
  int block_begin(int i) const;
  std::uint64_t block_mask(int i) const;
  std::string str() const;  // "kpartite 7 7 7 9"
};

// s-uniform complete bipartite hypergraph on V_1 = {1..v1}, V_2 = {v1+1..v}.
struct HypergraphSpec {
  int v1 = 0, v2 = 0, s = 0;

  // Validates v1,v2 >= 1, s >= 2, s <= v1+v2-1 (else the edge set collapses),
  // v <= 64.
  static HypergraphSpec create(int v1, int v2, int s);

  int v() const { return v1 + v2; }
  std::string str() const;  // "hyperbipartite V1=7 V2=8 s=5"
};

// I' = (I, x_{n+1},...,x_{n+p}).
struct ExtensionSpec {
  SqfreeIdeal base;
  int p = 0;

  static ExtensionSpec create(SqfreeIdeal base, int p);
};

// Generators {x_a x_b : a, b in different blocks}; count = sum_{i<j} r_i r_j.
SqfreeIdeal kpartite_edge_ideal(const KPartiteSpec& spec);

// All s-subsets of [v] not contained in V_1 nor in V_2;
// count = C(v,s) - C(v1,s) - C(v2,s).
SqfreeIdeal uniform_bipartite_hypergraph_ideal(const HypergraphSpec& spec);

// Base generators plus the p new variables as degree-1 generators; p = 0
// returns the base unchanged.
SqfreeIdeal extend_with_variables(const ExtensionSpec& spec);

}  // namespace stanley
