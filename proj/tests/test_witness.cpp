#include "sepvar/witness.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace sepvar;
using sepvar::testing::P;

namespace {

WitnessPair witnesses_for(const char* p, const char* q, Verdict* out = nullptr) {
  Analysis a = analyze_pair(PolynomialPair(P(p), P(q)));
  Verdict v = classify(a);
  if (out) *out = v;
  return emit_witnesses(v, a);
}

OneFormSpec single_pair_form(int p, int q, std::vector<FormFactor> num, std::vector<FormFactor> den,
                             std::pair<int, int> w) {
  OneFormSpec f;
  f.name = "probe";
  f.numerator = std::move(num);
  f.denominator = std::move(den);
  f.wronskian = w;
  f.layout.n = f.layout.m = 6;
  f.layout.z2_power = 1;
  f.layout.matched = {{p, q}};
  return f;
}

}  // namespace

TEST_CASE("equal-degree gap forms") {
  auto w = witnesses_for("x^7 + x", "x^7 + 2*x");
  CHECK(w.first.to_string() == "W(z0,z1) / z2^2");
  CHECK(w.second.to_string() == "z0 * W(z0,z1) / z2^3");
  CHECK(w.first_report.overall);
  CHECK(w.second_report.overall);
  CHECK(w.independence_by_no_linear_factor);
}

TEST_CASE("alpha mass forms") {
  auto w = witnesses_for("x^5", "x^5 + x");
  CHECK(w.first.to_string() == "z0 * z2 * W(z1,z2) / (z0 - a1*z2)^4");
  CHECK(w.second.to_string() == "z2^2 * W(z1,z2) / (z0 - a1*z2)^4");
  CHECK(w.first_report.overall);
  CHECK(w.second_report.overall);
  CHECK(w.first.denominator_degree() - w.first.numerator_degree() == 2);
}

TEST_CASE("low-genus verdicts have no witness") {
  Analysis a = analyze_pair(PolynomialPair(P("x^3"), P("x^3")));
  CHECK_THROWS_WITH(emit_witnesses(classify(a), a), "no witness for low-genus verdicts");
}

TEST_CASE("degree balance is enforced") {
  auto f = single_pair_form(2, 2, {}, {{Tag::AlphaLine, 1, 0, 1}}, {1, 2});
  CHECK_THROWS_AS(check_regularity(f), MalformedForm);
}

TEST_CASE("denominator must divide the paired partial derivative") {
  // dF/dz0 carries (z0 - a1 z2)^p with p = 2; exponent 3 does not divide it.
  auto f = single_pair_form(2, 2, {{Tag::BetaLine, 1, 0, 1}}, {{Tag::AlphaLine, 1, 0, 3}}, {1, 2});
  auto rep = check_regularity(f);
  CHECK_FALSE(rep.overall);
  // W(z0,z1) pairs with dF/dz2 = z2^1 * (...): z2^2 is too much.
  f = single_pair_form(1, 1, {}, {{Tag::Z2, 0, 0, 2}}, {0, 1});
  CHECK_FALSE(check_regularity(f).overall);
}

TEST_CASE("branch order arithmetic at a matched point") {
  // (z0 - a1 z2) W(z2,z0) / (z1 - b1 z2)^3: orders 2a - 1 - 3b with
  // a = (q+1)/g, b = (p+1)/g. Regular at (1,3), not at (3,3).
  std::vector<FormFactor> num{{Tag::AlphaLine, 1, 0, 1}}, den{{Tag::BetaLine, 1, 0, 3}};
  CHECK(check_regularity(single_pair_form(1, 3, num, den, {2, 0})).overall);
  auto rep = check_regularity(single_pair_form(3, 3, num, den, {2, 0}));
  CHECK_FALSE(rep.overall);
}

TEST_CASE("layout must match the aggregate pairs") {
  auto f = single_pair_form(2, 2, {{Tag::BetaLine, 1, 0, 1}}, {{Tag::AlphaLine, 1, 0, 2}, {Tag::Z0, 0, 0, 1}},
                            {1, 2});
  PairMatching pm;
  pm.pair_classes = {{1, 1, 1}};
  pm.l0 = 1;
  auto rep = check_regularity(f, pm);
  CHECK_FALSE(rep.checks.front().satisfied);
  CHECK_FALSE(rep.overall);
}

TEST_CASE("order bounds") {
  auto b = order_bounds(3, 3);
  CHECK(b.ord0_lower == 1);
  CHECK(b.ratio0 == b.ratio1);
  b = order_bounds(1, 2);
  CHECK(b.ord0_lower == 3);
  CHECK(b.ratio0 == 2);
  CHECK(b.ratio1 == 3);
  CHECK(order_bounds(2, 4).ord0_lower == 5);
  CHECK_THROWS(order_bounds(0, 1));
  for (int p = 1; p <= 12; ++p)
    for (int q = 1; q <= 12; ++q) {
      auto pq = order_bounds(p, q), qp = order_bounds(q, p);
      CHECK(pq.ratio0 == qp.ratio1);
      CHECK(pq.ratio1 == qp.ratio0);
      int g = std::gcd(p + 1, q + 1);
      CHECK((q + 1) / g * (p + 1) % (q + 1) == 0);
      CHECK(pq.ord0_lower >= (q + 1) / g);
    }
}
