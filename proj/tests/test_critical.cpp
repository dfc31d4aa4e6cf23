#include "sepvar/critical.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sepvar;
using sepvar::testing::P;

TEST_CASE("analyze") {
  auto cs = analyze(P("x^3 - 3*x"));
  REQUIRE(cs.classes.size() == 1);
  CHECK(cs.classes[0].roots == P("x^2 - 1"));
  CHECK(cs.classes[0].multiplicity == 1);
  CHECK(cs.classes[0].values == P("x^2 - 4"));
  CHECK(cs.distinct_points == 2);

  cs = analyze(P("x^6"));
  REQUIRE(cs.classes.size() == 1);
  CHECK(cs.classes[0].roots == P("x"));
  CHECK(cs.classes[0].multiplicity == 5);
  CHECK(cs.classes[0].values == P("x"));

  cs = analyze(P("x^4 - 2*x^2"));
  REQUIRE(cs.classes.size() == 1);
  CHECK(cs.classes[0].values == P("x*(x+1)^2"));
  CHECK(cs.distinct_points == 3);

  CHECK_THROWS(analyze(P("3*x + 1")));
}

TEST_CASE("hypothesis I") {
  CHECK_FALSE(hypothesis_I(P("x^4 - 2*x^2")));
  CHECK(hypothesis_I(P("x^9")));
  CHECK(hypothesis_I(P("x^3 - 3*x")));
}

TEST_CASE("pair construction normalizes") {
  PolynomialPair pp(P("x^2"), P("x^5"));
  CHECK(pp.swapped);
  CHECK(pp.n == 5);
  CHECK(pp.m == 2);
  CHECK_THROWS_WITH(PolynomialPair(P("x"), P("x^2")), "linear polynomial excluded");
  CHECK(intermediate_degree(P("x^7 + 3*x^2 + 1")) == 2);
  CHECK(intermediate_degree(P("x^7 + 1")) == 0);
}

TEST_CASE("match_pairs examples") {
  auto pm = match_pairs(PolynomialPair(P("x^3 - 3*x"), P("x^3 - 3*x")));
  REQUIRE(pm.pair_classes.size() == 1);
  CHECK(pm.pair_classes[0] == PairClass{1, 1, 2});
  CHECK(pm.l0 == 2);
  CHECK(pm.unmatched_p_mass == 0);
  CHECK(pm.unmatched_q_mass == 0);

  pm = match_pairs(PolynomialPair(P("x^5"), P("x^2")));
  REQUIRE(pm.pair_classes.size() == 1);
  CHECK(pm.pair_classes[0] == PairClass{4, 1, 1});
  CHECK(theorem1_lhs(pm) == 3);
  CHECK(corollary1_lhs(pm) == 0);

  pm = match_pairs(PolynomialPair(P("x^5"), P("x^5 + x")));
  CHECK(pm.pair_classes.empty());
  CHECK(pm.l0 == 0);
  CHECK(pm.unmatched_p_mass == 4);
  CHECK(theorem1_lhs(pm) == 4);

  pm = match_pairs(PolynomialPair(P("x^5 + x"), P("x^5")));
  CHECK(corollary1_lhs(pm) == 4);

  // All values matched with p = q: both sums vanish.
  pm = match_pairs(PolynomialPair(P("x^4 - 4*x^3"), P("x^4 - 4*x^3")));
  CHECK(theorem1_lhs(pm) == 0);
  CHECK(corollary1_lhs(pm) == 0);
}

TEST_CASE("homogenized meta") {
  auto meta = homogenized_meta(PolynomialPair(P("x^7 + x"), P("x^7 + 2*x")));
  CHECK(meta.mprime == 1);
  CHECK(meta.mdoubleprime == 1);
  CHECK(meta.z2_power_in_dF_dz2 == 5);
  meta = homogenized_meta(PolynomialPair(P("x^6 + x^2"), P("x^3")));
  CHECK(meta.mprime == 3);
  CHECK(meta.mdoubleprime == 3);
  CHECK(meta.z2_power_in_dF_dz2 == 2);
}

TEST_CASE("matching invariants (random)") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> deg(2, 7);
  int checked_hyp = 0;
  for (int t = 0; t < 300; ++t) {
    Poly a = testing::random_poly(rng, deg(rng), 3);
    Poly b = testing::random_poly(rng, deg(rng), 3);
    // Shift constants so that some values coincide.
    if (t % 3 == 0) b = compose(a, P("x + 1")) + P("1");
    PolynomialPair pp(a, b);
    auto pm = match_pairs(pp);
    int sp = 0, sq = 0;
    for (const auto& c : pm.pair_classes) {
      CHECK(c.count > 0);
      sp += c.p * c.count;
      sq += c.q * c.count;
    }
    CHECK(pm.l0 >= 0);

    // Swap symmetry transposes (p, q, count).
    auto swapped = match_pairs(analyze(pp.q), analyze(pp.p));
    std::vector<PairClass> transposed;
    for (const auto& c : pm.pair_classes) transposed.push_back({c.q, c.p, c.count});
    std::sort(transposed.begin(), transposed.end(),
              [](const PairClass& x, const PairClass& y) { return std::pair(x.p, x.q) < std::pair(y.p, y.q); });
    CHECK(swapped.pair_classes == transposed);

    if (hypothesis_I(pp.p) && hypothesis_I(pp.q)) {
      ++checked_hyp;
      CHECK(pm.unmatched_p_mass + sp == pp.n - 1);
      CHECK(pm.unmatched_q_mass + sq == pp.m - 1);
      CHECK(pm.l0 <= std::min(pm.l, pm.h));
    }
  }
  CHECK(checked_hyp > 100);
}
