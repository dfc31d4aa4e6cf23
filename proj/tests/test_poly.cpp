#include "sepvar/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sepvar;
using sepvar::testing::P;

TEST_CASE("rational stays canonical") {
  Rational r(6, 4);
  r.canonicalize();
  Rational s = r * Rational(2, 3);
  CHECK(s == 1);
  CHECK(s.get_den() == 1);
  CHECK(to_string(Rational(-4, 7)) == "-4/7");
}

TEST_CASE("poly basics") {
  Poly p = P("x^3 - 3*x + 1");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(1) == -3);
  CHECK(p.to_string() == "x^3 - 3*x + 1");
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.eval(2) == 3);
  CHECK(P("2*x^2 + 4").monic() == P("x^2 + 2"));
}

TEST_CASE("division") {
  auto [q, r] = divmod(P("x^3 - 1"), P("x - 1"));
  CHECK(q == P("x^2 + x + 1"));
  CHECK(r.is_zero());
  CHECK(P("x^2 + 1") % P("x - 2") == P("5"));
  CHECK_THROWS(P("x^2 + 1") / P("x - 2"));
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2 - 1"), P("x^3 - x")) == P("x^2 - 1"));
  CHECK(gcd(P("3*x^2 + 6"), Poly()) == P("x^2 + 2"));
  CHECK(gcd(P("x^2 + 1"), P("x^2 - 1")) == P("1"));
  CHECK_THROWS_WITH(gcd(Poly(), Poly()), "gcd undefined");
}

TEST_CASE("gcd divides both inputs (random)") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Poly common = testing::random_poly(rng, 1 + t % 3);
    Poly a = common * testing::random_poly(rng, 1 + t % 7);
    Poly b = common * testing::random_poly(rng, 1 + t % 5);
    Poly g = gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK((g % common.monic()).is_zero());
  }
}

TEST_CASE("derivative and compose") {
  CHECK(derivative(P("x^7")) == P("7*x^6"));
  CHECK(derivative(P("5")).is_zero());
  CHECK(derivative(P("x^3 - 3*x")) == P("3*x^2 - 3"));
  Poly p = P("x^3 - 2*x + 5");
  CHECK(compose(p, Poly::x()) == p);
  CHECK(compose(P("x^2"), P("x + 1")) == P("x^2 + 2*x + 1"));
  CHECK(compose(p, P("x^2 + 1")).degree() == 6);
}

TEST_CASE("squarefree decomposition") {
  auto d = squarefree_decomposition(P("x^3"));
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].factor == P("x"));
  CHECK(d.parts[0].multiplicity == 3);

  d = squarefree_decomposition(P("(x-1)^2*(x+2)"));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].factor == P("x + 2"));
  CHECK(d.parts[0].multiplicity == 1);
  CHECK(d.parts[1].factor == P("x - 1"));
  CHECK(d.parts[1].multiplicity == 2);

  d = squarefree_decomposition(P("2*x^2 - 2"));
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].factor == P("x^2 - 1"));
  CHECK_THROWS(squarefree_decomposition(Poly()));
}

TEST_CASE("squarefree round trip and multiplicity mass (random)") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Poly p = testing::random_poly(rng, 1 + t % 4) * power(testing::random_poly(rng, 1 + t % 2), 1 + t % 3);
    auto d = squarefree_decomposition(p);
    CHECK(d.expand() == p);
    for (std::size_t i = 1; i < d.parts.size(); ++i) CHECK(d.parts[i - 1].multiplicity < d.parts[i].multiplicity);
    for (const auto& part : d.parts) CHECK(is_squarefree(part.factor));

    Poly q = testing::random_poly(rng, 2 + t % 9);
    int mass = 0;
    for (const auto& part : squarefree_decomposition(derivative(q)).parts)
      mass += part.multiplicity * part.factor.degree();
    CHECK(mass == q.degree() - 1);
  }
}

TEST_CASE("resultant, hand values") {
  // Res(x^2+1, x^2-2) = prod over x = +-i of (x^2 - 2) = 9.
  CHECK(resultant(P("x^2 + 1"), P("x^2 - 2")) == 9);
  CHECK(resultant_sylvester(P("x^2 + 1"), P("x^2 - 2")) == 9);
  // Common root gives zero.
  CHECK(resultant(P("x^2 - 1"), P("x - 1")) == 0);
}

TEST_CASE("resultant: Euclidean and Sylvester routes agree (random)") {
  std::mt19937 rng(7);
  for (int t = 0; t < 150; ++t) {
    Poly a = testing::random_poly(rng, 1 + t % 6);
    Poly b = testing::random_poly(rng, 1 + (t / 6) % 5);
    CHECK(resultant(a, b) == resultant_sylvester(a, b));
  }
}

TEST_CASE("resultant_shift") {
  CHECK(resultant_shift(P("x^2 - 1"), P("x^3 - 3*x")) == P("x^2 - 4"));
  Poly p = P("x^4 - 7*x + 2");
  CHECK(resultant_shift(P("x"), p) == P("x - 2"));
  CHECK(resultant_shift(P("x^3 - x"), P("x^4 - 2*x^2")) == P("x*(x+1)^2"));
  CHECK_THROWS(resultant_shift(P("3"), p));
}

TEST_CASE("resultant_shift vanishes at values of rational roots (random)") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Rational r1 = testing::random_rational(rng);
    Poly S = (Poly::x() - Poly::constant(r1)) * testing::random_poly(rng, 1 + t % 3).monic();
    Poly Pp = testing::random_poly(rng, 1 + t % 6);
    Poly R = resultant_shift(S, Pp);
    CHECK(R.degree() == S.degree());
    CHECK(R.eval(Pp.eval(r1)) == 0);
    CHECK(R == resultant_shift_sylvester(S, Pp));
  }
}

TEST_CASE("interpolate") {
  std::vector<Rational> xs{0, 1, 2, 3}, ys;
  Poly p = P("x^3 - 2*x + 1/2");
  for (auto& x : xs) ys.push_back(p.eval(x));
  CHECK(interpolate(xs, ys) == p);
}
