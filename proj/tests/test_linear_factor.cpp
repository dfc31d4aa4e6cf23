#include "sepvar/linear_factor.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sepvar;
using sepvar::testing::P;

TEST_CASE("identity pair") {
  PolynomialPair pp(P("x^4 - 3*x + 2"), P("x^4 - 3*x + 2"));
  auto w = find_linear_factor(pp);
  REQUIRE(w);
  CHECK(w->lambda_minpoly == P("x - 1"));
  CHECK(verify_linear_factor(pp, *w));
  CHECK(w->description == "x - y");
}

TEST_CASE("no linear factor") {
  CHECK_FALSE(find_linear_factor(PolynomialPair(P("x^2"), P("x^2 + 1"))));
  CHECK_FALSE(find_linear_factor(PolynomialPair(P("x^7 + x"), P("x^7 + 2*x"))));
  CHECK_FALSE(find_linear_factor(PolynomialPair(P("x^5"), P("x^3"))));
}

TEST_CASE("conjugate family") {
  // x^3 = (l*x)^3 for every cube root of unity l: x^3 - y^3 has three lines.
  PolynomialPair pp(P("x^3"), P("x^3"));
  auto w = find_linear_factor(pp);
  REQUIRE(w);
  CHECK(w->lambda_minpoly == P("x^3 - 1"));
  CHECK(verify_linear_factor(pp, *w));
}

TEST_CASE("a forged witness fails verification") {
  PolynomialPair pp(P("x^3 + x"), P("x^3 + x"));
  LinearFactorWitness bad{P("x + 1"), P("0"), P("1"), "forged"};
  CHECK_FALSE(verify_linear_factor(pp, bad));
}

TEST_CASE("affine substitution is always detected (random)") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    Poly A = testing::random_poly(rng, 2 + t % 6);
    Rational a = testing::random_rational(rng);
    if (a == 0) a = 2;
    Poly sigma = Poly{testing::random_rational(rng), a};
    PolynomialPair pp(compose(A, sigma), A);
    auto w = find_linear_factor(pp);
    REQUIRE(w);
    CHECK(verify_linear_factor(pp, *w));
  }
}
