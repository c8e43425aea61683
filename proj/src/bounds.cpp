#include "stanley/bounds.hpp"

namespace stanley {

namespace {

constexpr const char* kR1Warning =
    "r_1 = 1 is outside the standing assumption 2 <= r_1; the formula is "
    "evaluated but not asserted";

BigInt sum_cross_products(const KPartiteSpec& spec) {
  BigInt total = 0;
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    for (std::size_t j = i + 1; j < spec.parts.size(); ++j)
      total += BigInt(spec.parts[i]) * spec.parts[j];
  return total;
}

BigInt kpartite_numerator(const KPartiteSpec& spec) {
  BigInt num = binomial(static_cast<unsigned long>(spec.n()), 3);
  for (int r : spec.parts) num -= binomial(static_cast<unsigned long>(r), 3);
  return num;
}

long floor_long(const Rational& q) { return to_long(rational_floor(q)); }

}  // namespace

const char* bound_source_name(BoundSource source) {
  switch (source) {
    case BoundSource::KPARTITE_L24: return "KPARTITE_L24";
    case BoundSource::EXTENSION_T29: return "EXTENSION_T29";
    case BoundSource::HYPERGRAPH_T34: return "HYPERGRAPH_T34";
    case BoundSource::ISHAQ: return "ISHAQ";
    case BoundSource::MINDEG_LOWER: return "MINDEG_LOWER";
  }
  return "?";
}

const char* bound_theorem_label(BoundSource source) {
  switch (source) {
    case BoundSource::KPARTITE_L24: return "Lemma 2.4";
    case BoundSource::EXTENSION_T29: return "Theorem 2.9";
    case BoundSource::HYPERGRAPH_T34: return "Theorem 3.4";
    case BoundSource::ISHAQ: return "Ishaq, Theorem 2.8";
    case BoundSource::MINDEG_LOWER: return "minimal generator degree";
  }
  return "?";
}

BoundReport kpartite_upper_bound(const KPartiteSpec& spec) {
  BoundReport report;
  report.source = BoundSource::KPARTITE_L24;
  report.exact_value = Rational(2) + make_rational(kpartite_numerator(spec),
                                                   sum_cross_products(spec));
  report.integer_bound = floor_long(report.exact_value);
  report.inputs = spec.str();
  if (spec.r1_below_assumption) report.warnings.push_back(kR1Warning);
  return report;
}

BoundReport extension_upper_bound(const KPartiteSpec& spec, int p,
                                  std::optional<long> forced_A) {
  if (p < 0) throw ValidationError("extension size p must be nonnegative");
  BoundReport base = kpartite_upper_bound(spec);
  long A = forced_A.value_or(base.integer_bound);
  unsigned long n = static_cast<unsigned long>(spec.n());
  unsigned long up = static_cast<unsigned long>(p);

  BigInt numerator = kpartite_numerator(spec) + binomial(up, 3) +
                     BigInt(spec.n()) * binomial(up, 2) + BigInt(p) * binomial(n, 2);
  // sum r_i r_j + np + C(p,2) - p(A+p-1)/2; the last term may be a
  // half-integer, so the whole denominator stays rational.
  Rational denominator(sum_cross_products(spec) + BigInt(spec.n()) * p + binomial(up, 2));
  denominator -= make_rational(BigInt(p) * (BigInt(A) + p - 1), 2);
  if (denominator <= 0)
    throw ValidationError("vacuous bound: nonpositive denominator (A=" +
                          std::to_string(A) + ", p=" + std::to_string(p) + ")");

  BoundReport report;
  report.source = BoundSource::EXTENSION_T29;
  report.exact_value = Rational(2) + Rational(numerator) / denominator;
  report.integer_bound = floor_long(report.exact_value);
  report.lemma_A = A;
  report.naive_bound = A + p;
  report.inputs = spec.str() + " extend p=" + std::to_string(p);
  report.warnings = base.warnings;
  if (forced_A)
    report.warnings.push_back("A=" + std::to_string(A) +
                              " supplied manually, not derived from the k-partite bound");
  return report;
}

std::pair<BoundReport, BoundReport> hypergraph_bounds(const HypergraphSpec& spec) {
  unsigned long v = static_cast<unsigned long>(spec.v());
  unsigned long v1 = static_cast<unsigned long>(spec.v1);
  unsigned long v2 = static_cast<unsigned long>(spec.v2);
  unsigned long s = static_cast<unsigned long>(spec.s);

  BigInt edges = binomial(v, s) - binomial(v1, s) - binomial(v2, s);
  BigInt edges_above = binomial(v, s + 1) - binomial(v1, s + 1) - binomial(v2, s + 1);

  BoundReport lower;
  lower.source = BoundSource::HYPERGRAPH_T34;
  lower.is_upper = false;
  lower.exact_value = Rational(spec.s);
  lower.integer_bound = spec.s;
  lower.inputs = spec.str();

  BoundReport upper;
  upper.source = BoundSource::HYPERGRAPH_T34;
  upper.exact_value = Rational(spec.s) + make_rational(edges_above, edges);
  upper.integer_bound = floor_long(upper.exact_value);
  upper.inputs = spec.str();
  return {lower, upper};
}

BoundReport ishaq_bipartite_bound(int n) {
  if (n < 4)
    throw ValidationError("the (n+2)/2 bipartite bound requires n >= 4 vertices");
  BoundReport report;
  report.source = BoundSource::ISHAQ;
  report.exact_value = make_rational(BigInt(n) + 2, 2);
  report.integer_bound = floor_long(report.exact_value);
  report.inputs = "n=" + std::to_string(n);
  return report;
}

BoundReport mindeg_lower_bound(const SqfreeIdeal& ideal) {
  BoundReport report;
  report.source = BoundSource::MINDEG_LOWER;
  report.is_upper = false;
  report.exact_value = Rational(ideal.mindeg());
  report.integer_bound = ideal.mindeg();
  report.inputs = "mindeg";
  return report;
}

}  // namespace stanley
