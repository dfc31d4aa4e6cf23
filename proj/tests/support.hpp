#pragma once

#include "sepvar/parse.hpp"
#include "sepvar/poly.hpp"

#include <random>

namespace sepvar::testing {

inline Poly P(const char* text) { return parse_poly(text); }

// Random integer polynomial of exact degree `deg`, coefficients in [-lim, lim].
inline Poly random_poly(std::mt19937& rng, int deg, int lim = 5) {
  std::uniform_int_distribution<int> c(-lim, lim);
  std::vector<Rational> cs(deg + 1);
  for (auto& x : cs) x = c(rng);
  while (cs.back() == 0) cs.back() = c(rng);
  return Poly(cs);
}

inline Rational random_rational(std::mt19937& rng, int lim = 7) {
  std::uniform_int_distribution<int> num(-lim, lim), den(1, lim);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace sepvar::testing
