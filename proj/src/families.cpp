#include "stanley/families.hpp"

#include <algorithm>
#include <numeric>

namespace stanley {

KPartiteSpec KPartiteSpec::create(std::vector<int> parts) {
  if (parts.size() < 2)
    throw ValidationError("no edges: a complete k-partite graph needs k >= 2 parts");
  for (int r : parts)
    if (r < 1) throw ValidationError("part sizes must be positive");
  std::sort(parts.begin(), parts.end());
  long total = std::accumulate(parts.begin(), parts.end(), 0L);
  if (total > kMaxVariables)
    throw ValidationError("total vertex count " + std::to_string(total) +
                          " exceeds the " + std::to_string(kMaxVariables) +
                          "-variable cap");
  KPartiteSpec spec;
  spec.r1_below_assumption = parts.front() == 1;
  spec.parts = std::move(parts);
  return spec;
}

int KPartiteSpec::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int KPartiteSpec::block_begin(int i) const {
  int begin = 1;
  for (int j = 0; j < i - 1; ++j) begin += parts[static_cast<std::size_t>(j)];
  return begin;
}

std::uint64_t KPartiteSpec::block_mask(int i) const {
  int begin = block_begin(i);
  int size = parts[static_cast<std::size_t>(i - 1)];
  return full_mask(size) << (begin - 1);
}

std::string KPartiteSpec::str() const {
  std::string out = "kpartite";
  for (int r : parts) out += " " + std::to_string(r);
  return out;
}

HypergraphSpec HypergraphSpec::create(int v1, int v2, int s) {
  if (v1 < 1 || v2 < 1)
    throw ValidationError("both vertex classes must be nonempty");
  if (s < 2) throw ValidationError("uniformity s must be at least 2");
  if (v1 + v2 > kMaxVariables)
    throw ValidationError("total vertex count exceeds the " +
                          std::to_string(kMaxVariables) + "-variable cap");
  if (s > v1 + v2 - 1)
    throw ValidationError("empty edge set: s must be at most |V|-1");
  return HypergraphSpec{v1, v2, s};
}

std::string HypergraphSpec::str() const {
  return "hyperbipartite V1=" + std::to_string(v1) + " V2=" + std::to_string(v2) +
         " s=" + std::to_string(s);
}

ExtensionSpec ExtensionSpec::create(SqfreeIdeal base, int p) {
  if (p < 0) throw ValidationError("extension size p must be nonnegative");
  if (base.n + p > kMaxVariables)
    throw ValidationError("extended ambient size " + std::to_string(base.n + p) +
                          " exceeds the " + std::to_string(kMaxVariables) +
                          "-variable cap");
  return ExtensionSpec{std::move(base), p};
}

SqfreeIdeal kpartite_edge_ideal(const KPartiteSpec& spec) {
  std::vector<Monomial> gens;
  for (int i = 1; i <= spec.k(); ++i) {
    for (int j = i + 1; j <= spec.k(); ++j) {
      std::uint64_t bi = spec.block_mask(i);
      for (std::uint64_t a = bi; a; a &= a - 1) {
        std::uint64_t abit = a & (~a + 1);
        std::uint64_t bj = spec.block_mask(j);
        for (std::uint64_t b = bj; b; b &= b - 1) {
          std::uint64_t bbit = b & (~b + 1);
          gens.push_back(Monomial(abit | bbit));
        }
      }
    }
  }
  return minimalize(std::move(gens), spec.n());
}

namespace {

// Visits all s-subsets of the index set [v] in lexicographic order.
template <typename F>
void for_each_subset_of_size(int v, int s, F&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    visit(mask);
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == v - s + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < s; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

SqfreeIdeal uniform_bipartite_hypergraph_ideal(const HypergraphSpec& spec) {
  int v = spec.v();
  BigInt count = binomial(static_cast<unsigned long>(v), static_cast<unsigned long>(spec.s)) -
                 binomial(static_cast<unsigned long>(spec.v1), static_cast<unsigned long>(spec.s)) -
                 binomial(static_cast<unsigned long>(spec.v2), static_cast<unsigned long>(spec.s));
  if (count == 0) throw ValidationError("empty edge set");
  if (count > 4'000'000)
    throw ValidationError("edge set has " + count.get_str() +
                          " hyperedges, past the enumeration limit");

  std::uint64_t side1 = full_mask(spec.v1);
  std::uint64_t side2 = full_mask(v) & ~side1;
  std::vector<Monomial> gens;
  for_each_subset_of_size(v, spec.s, [&](std::uint64_t mask) {
    if ((mask & ~side1) == 0 || (mask & ~side2) == 0) return;  // inside one side
    gens.push_back(Monomial(mask));
  });
  return minimalize(std::move(gens), v);
}

SqfreeIdeal extend_with_variables(const ExtensionSpec& spec) {
  if (spec.p == 0) return spec.base;
  std::vector<Monomial> gens = spec.base.gens;
  for (int i = spec.base.n + 1; i <= spec.base.n + spec.p; ++i)
    gens.push_back(Monomial(std::uint64_t{1} << (i - 1)));
  return minimalize(std::move(gens), spec.base.n + spec.p);
}

}  // namespace stanley
