// Brute-force oracles for the test and acceptance suites. Everything here
// works from first definitions (membership scans, unreduced partition
// enumeration, Pascal recurrences) and stays independent of the library's
// search and construction paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "stanley/core.hpp"
#include "stanley/families.hpp"

namespace oracle {

// Binomials by the Pascal recurrence alone.
inline stanley::BigInt pascal_binomial(int a, int b) {
  if (b > a || b < 0) return 0;
  std::vector<stanley::BigInt> row(static_cast<std::size_t>(a) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(b)];
}

// Membership straight from the definition: some generator support inside.
inline bool member(const std::vector<stanley::Monomial>& gens, std::uint64_t mask) {
  for (const stanley::Monomial& g : gens)
    if ((g.mask & mask) == g.mask) return true;
  return false;
}

// Every subset of [n] in the ideal's characteristic poset, by direct scan.
inline std::vector<std::uint64_t> poset_masks(const stanley::SqfreeIdeal& ideal) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ideal.n); ++mask)
    if (member(ideal.gens, mask)) out.push_back(mask);
  return out;
}

// ---------------------------------------------------------------------------
// Unreduced interval-partition search. Intervals [C, D] take any top D ⊇ C
// (no top-size normalization, no forced singletons); branching is on the
// minimal uncovered element, which enumerates every partition exactly once.
// ---------------------------------------------------------------------------

class BrutePartitions {
 public:
  BrutePartitions(std::vector<std::uint64_t> elements, int n) : n_(n) {
    std::sort(elements.begin(), elements.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      return a < b;
    });
    elements_ = std::move(elements);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
    covered_.assign(elements_.size(), 0);
  }

  // Is there a partition with every |D_i| >= d?
  bool exists_min_at_least(int d) {
    d_ = d;
    full_enumeration_ = false;
    return search(0);
  }

  // max over ALL interval partitions of min |D_i|; exponential, tiny posets only.
  int max_min_top() {
    d_ = 0;
    full_enumeration_ = true;
    best_ = -1;
    current_min_ = n_ + 1;
    search(0);
    return best_;
  }

  // max d with exists_min_at_least(d); the n-down scan form of the oracle.
  // The all-singletons partition makes d = mindeg feasible, so the scan
  // always lands.
  int sdepth() {
    int mindeg = n_ + 1;
    for (std::uint64_t e : elements_) mindeg = std::min(mindeg, std::popcount(e));
    for (int d = n_; d > mindeg; --d)
      if (exists_min_at_least(d)) return d;
    return mindeg;
  }

 private:
  bool search(std::size_t cursor) {
    while (cursor < elements_.size() && covered_[cursor]) ++cursor;
    if (cursor == elements_.size()) {
      if (!full_enumeration_) return true;
      best_ = std::max(best_, current_min_);
      return false;  // keep enumerating
    }
    std::uint64_t c = elements_[cursor];
    std::uint64_t rest = stanley::full_mask(n_) & ~c;
    // every D = c | extra, extra ⊆ rest
    std::uint64_t extra = 0;
    while (true) {
      int top_size = std::popcount(c | extra);
      if (full_enumeration_ || top_size >= d_) {
        if (try_place(cursor, c, extra)) return true;
      }
      if (extra == rest) break;
      extra = (extra - rest) & rest;
    }
    return false;
  }

  bool try_place(std::size_t cursor, std::uint64_t c, std::uint64_t extra) {
    std::vector<std::size_t> marked;
    std::uint64_t sub = 0;
    bool clean = true;
    while (true) {
      std::size_t idx = index_.at(c | sub);
      if (covered_[idx]) {
        clean = false;
        break;
      }
      covered_[idx] = 1;
      marked.push_back(idx);
      if (sub == extra) break;
      sub = (sub - extra) & extra;
    }
    bool found = false;
    if (clean) {
      int saved = current_min_;
      current_min_ = std::min(current_min_, std::popcount(c | extra));
      found = search(cursor + 1);
      current_min_ = saved;
    }
    for (std::size_t idx : marked) covered_[idx] = 0;
    return found;
  }

  int n_;
  int d_ = 0;
  bool full_enumeration_ = false;
  int best_ = -1;
  int current_min_ = 0;
  std::vector<std::uint64_t> elements_;
  std::map<std::uint64_t, std::size_t> index_;
  std::vector<std::uint8_t> covered_;
};

inline int brute_sdepth(const stanley::SqfreeIdeal& ideal) {
  return BrutePartitions(poset_masks(ideal), ideal.n).sdepth();
}

// ---------------------------------------------------------------------------
// Spec enumeration and random instances
// ---------------------------------------------------------------------------

// All nondecreasing part vectors with k parts in [min_k, max_k], r_1 >= min_r1
// and total n <= max_n.
inline std::vector<std::vector<int>> kpartite_parts(int max_n, int min_r1, int min_k = 2,
                                                    int max_k = 64) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int smallest, int total) -> void {
    int k = static_cast<int>(parts.size());
    if (k >= min_k && k <= max_k) out.push_back(parts);
    if (k == max_k) return;
    for (int r = smallest; total + r <= max_n; ++r) {
      parts.push_back(r);
      self(self, r, total + r);
      parts.pop_back();
    }
  };
  rec(rec, min_r1, 0);
  return out;
}

struct HypergraphTriple {
  int v1, v2, s;
};

// All (v1 <= v2, s) with v1+v2 <= max_v and 2 <= s <= v1+v2-1.
inline std::vector<HypergraphTriple> hypergraph_triples(int max_v) {
  std::vector<HypergraphTriple> out;
  for (int v1 = 1; v1 <= max_v; ++v1)
    for (int v2 = v1; v1 + v2 <= max_v; ++v2)
      for (int s = 2; s <= v1 + v2 - 1; ++s) out.push_back({v1, v2, s});
  return out;
}

// A random squarefree ideal on n variables (nonempty antichain).
inline stanley::SqfreeIdeal random_ideal(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> count_dist(1, 4);
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << n) - 1);
  while (true) {
    std::vector<stanley::Monomial> gens;
    int count = count_dist(rng);
    for (int i = 0; i < count; ++i) gens.push_back(stanley::Monomial(mask_dist(rng)));
    try {
      return stanley::minimalize(std::move(gens), n);
    } catch (const stanley::ValidationError&) {
      continue;  // can't happen (masks are nonzero), but stay safe
    }
  }
}

}  // namespace oracle
