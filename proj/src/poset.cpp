#include "stanley/poset.hpp"

#include <algorithm>

namespace stanley {

std::size_t CharacteristicPoset::size() const {
  return stratum_offset.empty() ? 0 : stratum_offset.back();
}

std::size_t CharacteristicPoset::index_of(std::uint64_t mask) const {
  int rank = std::popcount(mask);
  if (rank > n) throw ValidationError("subset outside the ambient set");
  const auto& stratum = strata[static_cast<std::size_t>(rank)];
  auto it = std::lower_bound(stratum.begin(), stratum.end(), mask, seq_lex_less);
  if (it == stratum.end() || *it != mask)
    throw ValidationError("subset " + subset_str(mask) + " is not a poset element");
  return stratum_offset[static_cast<std::size_t>(rank)] +
         static_cast<std::size_t>(it - stratum.begin());
}

std::uint64_t CharacteristicPoset::element_at(std::size_t index) const {
  for (std::size_t r = 0; r + 1 < stratum_offset.size(); ++r) {
    if (index < stratum_offset[r + 1]) return strata[r][index - stratum_offset[r]];
  }
  throw ValidationError("poset index out of range");
}

CharacteristicPoset build_poset(const SqfreeIdeal& ideal, int cap) {
  if (cap < 1 || cap > kDefaultPosetCap)
    throw ValidationError("poset cap must lie in [1, " +
                          std::to_string(kDefaultPosetCap) + "]");
  if (ideal.n > cap)
    throw ValidationError(
        "n=" + std::to_string(ideal.n) + " exceeds the poset enumeration cap " +
        std::to_string(cap) + "; only closed-form bounds are available at this size");

  int n = ideal.n;
  std::size_t universe = std::size_t{1} << n;

  // Superset-closure DP: member[mask] says some generator support is a subset
  // of mask. O(n·2^n) instead of scanning generators per mask.
  std::vector<std::uint8_t> member(universe, 0);
  for (const Monomial& g : ideal.gens) member[g.mask] = 1;
  for (int b = 0; b < n; ++b) {
    std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t mask = 0; mask < universe; ++mask)
      if (mask & bit) member[mask] |= member[mask ^ bit];
  }

  CharacteristicPoset poset;
  poset.n = n;
  poset.ideal = ideal;
  poset.strata.assign(static_cast<std::size_t>(n) + 1, {});
  for (std::uint64_t mask = 0; mask < universe; ++mask)
    if (member[mask])
      poset.strata[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  poset.stratum_offset.assign(poset.strata.size() + 1, 0);
  for (std::size_t r = 0; r < poset.strata.size(); ++r) {
    std::sort(poset.strata[r].begin(), poset.strata[r].end(), seq_lex_less);
    poset.stratum_offset[r + 1] = poset.stratum_offset[r] + poset.strata[r].size();
  }
  return poset;
}

PartitionValidation validate_partition(const CharacteristicPoset& poset,
                                       const IntervalPartition& partition) {
  PartitionValidation result;
  auto flag = [&](PartitionViolation::Kind kind, std::uint64_t subset,
                  std::string message) {
    result.ok = false;
    result.violations.push_back({kind, subset, std::move(message)});
  };

  std::uint64_t ambient = full_mask(poset.n);
  std::vector<std::uint8_t> cover_count(poset.size(), 0);
  bool doubly_reported = false;

  for (const Interval& iv : partition.intervals) {
    if ((iv.lower & ~ambient) || (iv.upper & ~ambient)) {
      flag(PartitionViolation::Kind::Malformed, iv.upper,
           "interval endpoint outside the ambient set");
      return result;
    }
    if ((iv.lower & iv.upper) != iv.lower) {
      flag(PartitionViolation::Kind::Malformed, iv.lower,
           "interval lower " + subset_str(iv.lower) + " not contained in upper " +
               subset_str(iv.upper));
      return result;
    }
    if (!poset.contains(iv.lower)) {
      flag(PartitionViolation::Kind::Malformed, iv.lower,
           "interval lower " + subset_str(iv.lower) + " is not a poset element");
      return result;
    }
    // Upward closure puts the whole interval in the poset; count each member.
    std::uint64_t free = iv.upper ^ iv.lower;
    std::uint64_t sub = 0;
    while (true) {
      std::uint64_t member_mask = iv.lower | sub;
      std::size_t idx = poset.index_of(member_mask);
      if (cover_count[idx] < 3) ++cover_count[idx];
      if (cover_count[idx] == 2 && !doubly_reported) {
        doubly_reported = true;
        flag(PartitionViolation::Kind::DoublyCovered, member_mask,
             subset_str(member_mask) + " covered by two intervals");
      }
      if (sub == free) break;
      sub = (sub - free) & free;  // next submask of free
    }
  }

  for (std::size_t idx = 0; idx < cover_count.size(); ++idx) {
    if (cover_count[idx] == 0) {
      std::uint64_t mask = poset.element_at(idx);
      flag(PartitionViolation::Kind::Uncovered, mask,
           subset_str(mask) + " not covered by any interval");
      break;  // one witness is enough
    }
  }
  return result;
}

int StanleyDecomposition::sdepth() const {
  int best = -1;
  for (const StanleySpace& s : spaces) {
    int dim = std::popcount(s.variables);
    if (best < 0 || dim < best) best = dim;
  }
  return best;
}

StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& partition) {
  PartitionValidation check = validate_partition(poset, partition);
  if (!check.ok)
    throw ValidationError("invalid partition: " + check.violations.front().message);
  StanleyDecomposition decomp;
  decomp.spaces.reserve(partition.intervals.size());
  for (const Interval& iv : partition.intervals)
    decomp.spaces.push_back({Monomial(iv.lower), iv.upper});
  return decomp;
}

}  // namespace stanley
