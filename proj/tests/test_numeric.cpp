#include "sepvar/numeric.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sepvar;
using sepvar::testing::P;

namespace {

// Is the exact point (re, im) inside one of the disks?
bool covered(const std::vector<ComplexApprox>& roots, const BigFloat& re, const BigFloat& im) {
  return std::any_of(roots.begin(), roots.end(), [&](const ComplexApprox& r) {
    BigComplex d = r.center() - BigComplex(re, im);
    return d.abs() <= r.radius;
  });
}

}  // namespace

TEST_CASE("bigfloat basics") {
  BigFloat a(Rational(1, 3), 128), b(3.0, 128);
  CHECK((a * b - BigFloat(1.0, 128)).to_double() == doctest::Approx(0).epsilon(1e-30));
  CHECK(sqrt(BigFloat(2.0, 64)).to_string(5) == "1.4142");
  CHECK(BigFloat::pow2(-10, 64).to_double() == 1.0 / 1024);
}

TEST_CASE("roots of x^2 + 1") {
  auto r = complex_roots(P("x^2 + 1"), 128);
  REQUIRE(r.size() == 2);
  BigFloat zero(128), one(1.0, 128);
  CHECK(covered(r, zero, one));
  CHECK(covered(r, zero, -one));
  for (const auto& z : r) CHECK(z.radius < BigFloat(1e-30, 128));
}

TEST_CASE("roots of x^2 - 3 against an integer square root") {
  // floor(sqrt(3) * 10^40) via exact integer arithmetic.
  mpz_class big("3" + std::string(80, '0'));
  mpz_class s = sqrt(big);
  Rational lo(s, mpz_class("1" + std::string(40, '0'))), hi(s + 1, mpz_class("1" + std::string(40, '0')));
  auto r = complex_roots(P("x^2 - 3"), 256);
  REQUIRE(r.size() == 2);
  int found = 0;
  for (const auto& z : r) {
    BigFloat re = z.real;
    if (re > BigFloat(0.0, 256)) {
      ++found;
      CHECK(BigFloat(lo, 256) - z.radius <= re);
      CHECK(re <= BigFloat(hi, 256) + z.radius);
    }
  }
  CHECK(found == 1);
}

TEST_CASE("rational roots of x^3 - x") {
  auto r = complex_roots(P("x^3 - x"), 128);
  REQUIRE(r.size() == 3);
  BigFloat zero(128);
  for (double v : {-1.0, 0.0, 1.0}) CHECK(covered(r, BigFloat(v, 128), zero));
}

TEST_CASE("complex_roots preconditions") {
  CHECK_THROWS(complex_roots(P("(x-1)^2"), 128));
  CHECK_THROWS(complex_roots(P("4"), 128));
}

TEST_CASE("random squarefree polynomials get disjoint disks") {
  std::mt19937 rng(8);
  for (int t = 0; t < 40; ++t) {
    Poly p = squarefree_part(testing::random_poly(rng, 2 + t % 9));
    if (p.degree() < 1) continue;
    auto r = complex_roots(p, 256);
    CHECK(static_cast<int>(r.size()) == p.degree());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) CHECK(disks_disjoint(r[i], r[j]));
  }
}

TEST_CASE("pair counts agree with the exact matching") {
  auto check = [](const char* p, const char* q, int l0) {
    PolynomialPair pp(P(p), P(q));
    auto nc = verify_pair_counts(pp, match_pairs(pp));
    CHECK(nc.outcome == NumericOutcome::Agree);
    CHECK(nc.l0 == l0);
  };
  check("x^3 - 3*x", "x^3 - 3*x", 2);
  check("x^5", "x^5 + x", 0);
  check("16*x^5 + 20*x^4 - 500*x^3", "12*x^5 + 195*x^4 + 750*x^3", 3);
}

TEST_CASE("numeric Hypothesis I") {
  CHECK(numeric_hypothesis_I(P("x^4 - 2*x^2")) == false);
  CHECK(numeric_hypothesis_I(P("x^3 - 3*x")) == true);
}

TEST_CASE("cluster report") {
  auto r = complex_roots(P("x^2 - 1"), 128);
  auto both = r;
  both.insert(both.end(), r.begin(), r.end());
  auto rep = cluster_disks(both, 128);
  CHECK_FALSE(rep.ambiguous);
  REQUIRE(rep.clusters.size() == 2);
  CHECK(rep.clusters[0].count == 2);
}

TEST_CASE("product formula") {
  std::vector<Rational> ys{0, 1, Rational(-3, 2), 7};
  auto pc = check_product_formula(P("x^3 - 2*x + 5"), P("x^4 + x - 1"), ys);
  CHECK(pc.within);
}
