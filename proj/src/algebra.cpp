#include "stanley/algebra.hpp"

#include <algorithm>

#include "stanley/bounds.hpp"
#include "stanley/sdepth.hpp"

namespace stanley {

std::string PrimeIdeal::str() const {
  std::string out = "(";
  bool first = true;
  for (std::uint64_t m = variables; m; m &= m - 1) {
    if (!first) out += ',';
    out += 'x';
    out += std::to_string(std::countr_zero(m) + 1);
    first = false;
  }
  return out + ")";
}

SqfreeIdeal PrimeIdeal::as_ideal(int n) const {
  std::vector<Monomial> gens;
  for (std::uint64_t m = variables; m; m &= m - 1)
    gens.push_back(Monomial(m & (~m + 1)));
  return minimalize(std::move(gens), n);
}

std::vector<PrimeIdeal> kpartite_associated_primes(const KPartiteSpec& spec) {
  std::uint64_t ambient = full_mask(spec.n());
  std::vector<PrimeIdeal> primes;
  primes.reserve(static_cast<std::size_t>(spec.k()));
  for (int i = 1; i <= spec.k(); ++i)
    primes.push_back({ambient & ~spec.block_mask(i)});
  return primes;
}

std::vector<PrimeIdeal> minimal_primes(const SqfreeIdeal& ideal) {
  if (ideal.n > 20)
    throw ValidationError("minimal prime enumeration capped at n <= 20");
  int n = ideal.n;
  std::size_t universe = std::size_t{1} << n;

  // T covers every generator iff the complement of T contains none, so one
  // superset-closure pass answers every cover query.
  std::vector<std::uint8_t> has_gen(universe, 0);
  for (const Monomial& g : ideal.gens) has_gen[g.mask] = 1;
  for (int b = 0; b < n; ++b) {
    std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t mask = 0; mask < universe; ++mask)
      if (mask & bit) has_gen[mask] |= has_gen[mask ^ bit];
  }
  std::uint64_t ambient = full_mask(n);
  auto is_cover = [&](std::uint64_t t) { return !has_gen[ambient & ~t]; };

  std::vector<PrimeIdeal> covers;
  for (std::uint64_t t = 1; t < universe; ++t) {
    if (!is_cover(t)) continue;
    bool minimal = true;
    for (std::uint64_t m = t; m; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      if (is_cover(t ^ bit)) {
        minimal = false;
        break;
      }
    }
    if (minimal) covers.push_back({t});
  }
  std::sort(covers.begin(), covers.end(), [](PrimeIdeal a, PrimeIdeal b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return seq_lex_less(a.variables, b.variables);
  });
  return covers;
}

namespace {

SqfreeIdeal colon_by_variable(const SqfreeIdeal& ideal, int v) {
  std::uint64_t bit = std::uint64_t{1} << (v - 1);
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens.size());
  for (const Monomial& g : ideal.gens) gens.push_back(Monomial(g.mask & ~bit));
  return minimalize(std::move(gens), ideal.n);
}

SqfreeIdeal add_variable(const SqfreeIdeal& ideal, int v) {
  std::vector<Monomial> gens = ideal.gens;
  gens.push_back(Monomial(std::uint64_t{1} << (v - 1)));
  return minimalize(std::move(gens), ideal.n);
}

void check_step(std::vector<ColonStep>& steps, std::string description,
                const SqfreeIdeal& claimed, const SqfreeIdeal& computed) {
  ColonStep step{std::move(description), claimed.serialize(), computed.serialize()};
  bool ok = claimed == computed;
  steps.push_back(step);
  if (!ok)
    throw std::runtime_error("colon trace failed at step \"" + steps.back().description +
                             "\": claimed " + steps.back().claimed + ", computed " +
                             steps.back().computed);
}

}  // namespace

std::vector<ColonStep> colon_trace(const KPartiteSpec& spec) {
  if (spec.n() > 16)
    throw ValidationError("colon trace capped at n <= 16");
  int n = spec.n();
  SqfreeIdeal ideal = kpartite_edge_ideal(spec);
  std::vector<PrimeIdeal> primes = kpartite_associated_primes(spec);
  std::vector<ColonStep> steps;

  SqfreeIdeal residual = ideal;
  for (int i = 1; i < spec.k(); ++i) {
    int lead = spec.block_begin(i);
    check_step(steps,
               "(J_" + std::to_string(i) + " : x" + std::to_string(lead) + ") = P_" +
                   std::to_string(i),
               primes[static_cast<std::size_t>(i - 1)].as_ideal(n),
               colon_by_variable(residual, lead));

    for (int v = lead; v < lead + spec.parts[static_cast<std::size_t>(i - 1)]; ++v)
      residual = add_variable(residual, v);

    // After absorbing block i the residual is (I_1,...,I_i, remaining pairs).
    std::vector<Monomial> expected;
    for (int b = 1; b <= i; ++b)
      for (std::uint64_t m = spec.block_mask(b); m; m &= m - 1)
        expected.push_back(Monomial(m & (~m + 1)));
    for (int a = i + 1; a <= spec.k(); ++a)
      for (int b = a + 1; b <= spec.k(); ++b)
        for (std::uint64_t ma = spec.block_mask(a); ma; ma &= ma - 1)
          for (std::uint64_t mb = spec.block_mask(b); mb; mb &= mb - 1)
            expected.push_back(Monomial((ma & (~ma + 1)) | (mb & (~mb + 1))));
    check_step(steps, "residual after block " + std::to_string(i),
               minimalize(std::move(expected), n), residual);
  }

  check_step(steps, "final residual = P_" + std::to_string(spec.k()),
             primes.back().as_ideal(n), residual);

  SqfreeIdeal intersection = primes.front().as_ideal(n);
  for (std::size_t i = 1; i < primes.size(); ++i)
    intersection = intersect_ideals(intersection, primes[i].as_ideal(n));
  check_step(steps, "P_1 ∩ ... ∩ P_" + std::to_string(spec.k()) + " = I", ideal,
             intersection);
  return steps;
}

int big_size(const std::vector<PrimeIdeal>& primes, int n) {
  if (primes.empty()) throw ValidationError("big size needs at least one prime");
  std::uint64_t ambient = full_mask(n);
  int count = static_cast<int>(primes.size());

  // Union over every (t+1)-subset must be the maximal ideal; check t ascending.
  for (int t = 0; t < count; ++t) {
    int pick = t + 1;
    bool all_cover = true;
    std::vector<int> at(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i) at[static_cast<std::size_t>(i)] = i;
    while (all_cover) {
      std::uint64_t together = 0;
      for (int i : at) together |= primes[static_cast<std::size_t>(i)].variables;
      if (together != ambient) all_cover = false;
      int pos = pick - 1;
      while (pos >= 0 && at[static_cast<std::size_t>(pos)] == count - pick + pos) --pos;
      if (pos < 0) break;
      ++at[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < pick; ++i)
        at[static_cast<std::size_t>(i)] = at[static_cast<std::size_t>(i - 1)] + 1;
    }
    if (all_cover) return t;
  }
  throw std::runtime_error(
      "big size undefined: no t < #primes makes every (t+1)-sum maximal");
}

AssPrimesReport kpartite_ass_report(const KPartiteSpec& spec) {
  AssPrimesReport report;
  report.primes = kpartite_associated_primes(spec);
  report.big_size_value = big_size(report.primes, spec.n());
  SqfreeIdeal intersection = report.primes.front().as_ideal(spec.n());
  for (std::size_t i = 1; i < report.primes.size(); ++i)
    intersection = intersect_ideals(intersection, report.primes[i].as_ideal(spec.n()));
  report.decomposition_verified = intersection == kpartite_edge_ideal(spec);
  return report;
}

// ---------------------------------------------------------------------------
// Homology-based depth oracle
// ---------------------------------------------------------------------------

namespace {

// Rank of the boundary map from faces of cardinality c to cardinality c-1,
// over GF(2). Columns are packed over the row index space.
int gf2_rank(const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
  std::size_t words = (rows.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<std::size_t> pivot_at;
  int rank = 0;
  std::vector<std::uint64_t> col(words);
  for (std::uint64_t f : cols) {
    std::fill(col.begin(), col.end(), 0);
    for (std::uint64_t m = f; m; m &= m - 1) {
      std::uint64_t sub = f ^ (m & (~m + 1));
      auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      std::size_t r = static_cast<std::size_t>(it - rows.begin());
      col[r >> 6] ^= std::uint64_t{1} << (r & 63);
    }
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      std::size_t p = pivot_at[k];
      if (col[p >> 6] >> (p & 63) & 1)
        for (std::size_t w = 0; w < words; ++w) col[w] ^= pivots[k][w];
    }
    std::size_t lead = rows.size();
    for (std::size_t w = 0; w < words; ++w)
      if (col[w]) {
        lead = (w << 6) + static_cast<std::size_t>(std::countr_zero(col[w]));
        break;
      }
    if (lead < rows.size()) {
      pivots.push_back(col);
      pivot_at.push_back(lead);
      ++rank;
    }
  }
  return rank;
}

// Fraction-free (Bareiss) elimination; entries stay exact integers.
int bareiss_rank(std::vector<std::vector<BigInt>>& a) {
  if (a.empty() || a[0].empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  BigInt prev = 1;
  std::size_t r = 0, c = 0;
  int rank = 0;
  BigInt t;
  while (r < rows && c < cols) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) {
      ++c;
      continue;
    }
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++rank;
    ++r;
    ++c;
  }
  return rank;
}

int char0_rank(const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& cols) {
  std::vector<std::vector<BigInt>> a(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::uint64_t f = cols[j];
    int position = 0;  // index of the removed vertex within the ascending face
    for (std::uint64_t m = f; m; m &= m - 1, ++position) {
      std::uint64_t sub = f ^ (m & (~m + 1));
      auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      a[static_cast<std::size_t>(it - rows.begin())][j] = (position % 2 == 0) ? 1 : -1;
    }
  }
  return bareiss_rank(a);
}

// Largest i = |W| - r - 1 with reduced homology H~_r of the induced
// subcomplex on W nonzero; -1 when all homology vanishes.
int subcomplex_contribution(const SqfreeIdeal& ideal, std::uint64_t w, int field_char) {
  int size = std::popcount(w);
  std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(size) + 1);
  std::uint64_t sub = 0;
  while (true) {  // submasks in increasing numeric order, so each list is sorted
    if (!ideal.contains(Monomial(sub)))
      faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
    if (sub == w) break;
    sub = (sub - w) & w;
  }

  // rank_map[c]: rank of the boundary from cardinality c to c-1; the c = 1 map
  // is the augmentation onto the empty face.
  std::vector<int> rank_map(static_cast<std::size_t>(size) + 2, 0);
  for (int c = 1; c <= size; ++c) {
    const auto& rows = faces[static_cast<std::size_t>(c - 1)];
    const auto& cols = faces[static_cast<std::size_t>(c)];
    if (rows.empty() || cols.empty()) continue;
    rank_map[static_cast<std::size_t>(c)] =
        field_char == 2 ? gf2_rank(rows, cols) : char0_rank(rows, cols);
  }

  int best = -1;
  for (int c = 0; c <= size; ++c) {
    long dim = static_cast<long>(faces[static_cast<std::size_t>(c)].size()) -
               rank_map[static_cast<std::size_t>(c)] -
               rank_map[static_cast<std::size_t>(c) + 1];
    if (dim > 0) best = std::max(best, size - c);
  }
  return best;
}

}  // namespace

DepthReport depth_quotient(const SqfreeIdeal& ideal, int field_char) {
  if (field_char != 0 && field_char != 2)
    throw ValidationError("field characteristic must be 0 or 2");
  if (ideal.n > 12)
    throw ValidationError("depth oracle capped at n <= 12");

  int n = ideal.n;
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
    by_size[static_cast<std::size_t>(std::popcount(w))].push_back(w);

  // W = ∅ always contributes 0 (the free module itself). A set W can
  // contribute at most |W|, so smaller W cannot beat the running maximum.
  int pd = 0;
  for (int size = n; size >= 1 && size > pd; --size)
    for (std::uint64_t w : by_size[static_cast<std::size_t>(size)])
      pd = std::max(pd, subcomplex_contribution(ideal, w, field_char));

  DepthReport report;
  report.field_char = field_char;
  report.projective_dimension = pd;
  report.depth_quotient = n - pd;
  report.depth_ideal = report.depth_quotient + 1;
  return report;
}

StanleyCertificate stanley_certificate(const KPartiteSpec& spec) {
  StanleyCertificate cert;
  cert.family = spec.str();
  std::vector<PrimeIdeal> primes = kpartite_associated_primes(spec);
  cert.big_size_value = big_size(primes, spec.n());
  cert.big_size_ok = cert.big_size_value == 1;

  if (spec.n() <= 8) {
    cert.numeric_checked = true;
    SqfreeIdeal ideal = kpartite_edge_ideal(spec);
    SearchOptions options;
    options.upper_bound_hint = static_cast<int>(kpartite_upper_bound(spec).integer_bound);
    cert.sdepth_value = exact_sdepth(ideal, options).value;
    cert.depth_ideal_char2 = depth_quotient(ideal, 2).depth_ideal;
    cert.depth_ideal_char0 = depth_quotient(ideal, 0).depth_ideal;
    if (*cert.depth_ideal_char2 != *cert.depth_ideal_char0)
      cert.warnings.push_back("depth differs between characteristics 2 and 0");
    cert.numeric_ok = *cert.sdepth_value >= *cert.depth_ideal_char2 &&
                      *cert.sdepth_value >= *cert.depth_ideal_char0;
  }
  cert.certified = cert.big_size_ok && cert.numeric_ok;
  return cert;
}

}  // namespace stanley
