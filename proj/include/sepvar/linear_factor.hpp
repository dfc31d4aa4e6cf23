#pragma once

#include "sepvar/critical.hpp"

#include <optional>
#include <string>

namespace sepvar {

// P(x) == Q(l*x + mu(l)) for every root l of lambda_minpoly, with
// mu(l) = mu_numerator(l) / mu_denominator(l).
struct LinearFactorWitness {
  Poly lambda_minpoly;
  Poly mu_numerator;
  Poly mu_denominator;
  std::string description;
};

std::optional<LinearFactorWitness> find_linear_factor(const PolynomialPair& pp);
bool verify_linear_factor(const PolynomialPair& pp, const LinearFactorWitness& w);

}  // namespace sepvar
