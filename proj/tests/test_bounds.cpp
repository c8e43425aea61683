#include "doctest.h"
#include "oracle.hpp"
#include "stanley/bounds.hpp"

using namespace stanley;

TEST_CASE("k-partite bound on the worked instances") {
  BoundReport big = kpartite_upper_bound(KPartiteSpec::create({7, 7, 7, 9}));
  CHECK(big.exact_value == Rational(2) + make_rational(3871, 336));
  CHECK(big.exact_value == make_rational(649, 48));
  CHECK(big.integer_bound == 13);
  CHECK(big.is_upper);
  CHECK(big.warnings.empty());

  BoundReport tiny = kpartite_upper_bound(KPartiteSpec::create({1, 1}));
  CHECK(tiny.exact_value == Rational(2));
  CHECK(tiny.integer_bound == 2);
  CHECK_FALSE(tiny.warnings.empty());  // r_1 = 1 flag

  BoundReport k22 = kpartite_upper_bound(KPartiteSpec::create({2, 2}));
  CHECK(k22.exact_value == Rational(3));
  CHECK(k22.integer_bound == 3);  // floor of an exact integer
}

TEST_CASE("extension bound on the worked instances") {
  KPartiteSpec big = KPartiteSpec::create({7, 7, 7, 9});

  BoundReport ext = extension_upper_bound(big, 10);
  CHECK(ext.exact_value == Rational(2) + make_rational(9691, 571));
  CHECK(ext.integer_bound == 18);
  CHECK(ext.lemma_A == 13);
  CHECK(ext.naive_bound == 23);

  // p = 0 reproduces the k-partite report exactly
  BoundReport at_zero = extension_upper_bound(big, 0);
  BoundReport base = kpartite_upper_bound(big);
  CHECK(at_zero.exact_value == base.exact_value);
  CHECK(at_zero.integer_bound == base.integer_bound);
  CHECK(at_zero.naive_bound == base.integer_bound);

  // parts (2,2), p=3, A=3: 2 + 35/(23/2) = 2 + 70/23
  BoundReport small = extension_upper_bound(KPartiteSpec::create({2, 2}), 3);
  CHECK(small.lemma_A == 3);
  CHECK(small.exact_value == Rational(2) + make_rational(70, 23));
  CHECK(small.integer_bound == 5);
}

TEST_CASE("denominator simplification identity on a grid") {
  std::mt19937 rng(1618);
  std::uniform_int_distribution<int> part_count(2, 4);
  std::uniform_int_distribution<int> part_size(1, 9);
  std::uniform_int_distribution<int> p_dist(0, 12);
  std::uniform_int_distribution<long> a_dist(0, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> parts;
    for (int i = 0, k = part_count(rng); i < k; ++i) parts.push_back(part_size(rng));
    KPartiteSpec spec = KPartiteSpec::create(parts);
    int p = p_dist(rng);
    long A = a_dist(rng);
    long n = spec.n();
    BigInt cross = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        cross += BigInt(spec.parts[i]) * spec.parts[j];
    Rational lhs = Rational(cross + BigInt(n) * p + binomial(p, 2)) -
                   make_rational(BigInt(p) * (A + p - 1), 2);
    Rational rhs = Rational(cross) + make_rational(BigInt(p) * (2 * n - A), 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vacuous extension bound is rejected, reachable only by forcing A") {
  KPartiteSpec k22 = KPartiteSpec::create({2, 2});
  CHECK_THROWS_WITH_AS(extension_upper_bound(k22, 4, 100L),
                       doctest::Contains("vacuous"), ValidationError);
  // a forced but harmless A is reported with a warning
  BoundReport forced = extension_upper_bound(k22, 2, 3L);
  CHECK(forced.lemma_A == 3);
  CHECK_FALSE(forced.warnings.empty());
}

TEST_CASE("hypergraph bounds on the worked instances") {
  auto [lower, upper] = hypergraph_bounds(HypergraphSpec::create(7, 8, 5));
  CHECK(lower.integer_bound == 5);
  CHECK_FALSE(lower.is_upper);
  CHECK(upper.exact_value == Rational(5) + make_rational(4970, 2926));
  CHECK(upper.integer_bound == 6);

  auto [l22, u22] = hypergraph_bounds(HypergraphSpec::create(2, 2, 2));
  CHECK(l22.integer_bound == 2);
  CHECK(u22.exact_value == kpartite_upper_bound(KPartiteSpec::create({2, 2})).exact_value);

  // Veronese case: both side binomials vanish
  auto [lv, uv] = hypergraph_bounds(HypergraphSpec::create(2, 3, 4));
  CHECK(lv.integer_bound == 4);
  CHECK(uv.exact_value == Rational(4) + make_rational(1, 5));
  CHECK(uv.integer_bound == 4);
}

TEST_CASE("hypergraph upper bound at s=2 equals the two-part k-partite bound") {
  for (const auto& t : oracle::hypergraph_triples(8)) {
    if (t.s != 2) continue;
    Rational hyper = hypergraph_bounds(HypergraphSpec::create(t.v1, t.v2, 2))
                         .second.exact_value;
    Rational kp = kpartite_upper_bound(KPartiteSpec::create({t.v1, t.v2})).exact_value;
    CHECK(hyper == kp);
  }
}

TEST_CASE("bipartite (n+2)/2 bound") {
  CHECK(ishaq_bipartite_bound(4).integer_bound == 3);
  CHECK(ishaq_bipartite_bound(5).integer_bound == 3);
  CHECK(ishaq_bipartite_bound(5).exact_value == make_rational(7, 2));
  CHECK(ishaq_bipartite_bound(30).integer_bound == 16);
  CHECK_THROWS_AS(ishaq_bipartite_bound(3), ValidationError);
}

TEST_CASE("mindeg lower bound and r_1 warning propagation") {
  SqfreeIdeal mixed = minimalize(
      {Monomial::from_indices({1, 2}), Monomial::from_indices({3})}, 3);
  BoundReport lower = mindeg_lower_bound(mixed);
  CHECK_FALSE(lower.is_upper);
  CHECK(lower.integer_bound == 1);

  BoundReport flagged = kpartite_upper_bound(KPartiteSpec::create({1, 4}));
  REQUIRE_FALSE(flagged.warnings.empty());
  CHECK(flagged.warnings.front().find("r_1 = 1") != std::string::npos);
}
