#pragma once

#include "sepvar/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

// Affine singular point (a, b) with P(a) = Q(b), P'(a) = Q'(b) = 0, where a
// has multiplicity p in P' and b has multiplicity q in Q'.
struct SingularPoint {
  int p = 0;
  int q = 0;
  int multiplicity = 0;  // min(p, q) + 1
  bool ordinary = false; // p == q
};

struct SingularProfile {
  bool supported = false;  // false when n > m
  int n = 0;
  std::vector<SingularPoint> points;
};

SingularProfile singular_profile(const PolynomialPair& pp, const PairMatching& pm);
SingularProfile ordinary_profile(int n, const std::vector<int>& multiplicities);

int deficiency(const SingularProfile& profile);

enum class Irreducibility { Irreducible, HasLinearComponent, Unknown };
const char* irreducibility_name(Irreducibility r);
Irreducibility irreducibility_bkq(const SingularProfile& profile);

// Can an irreducible curve of degree d split off, given that all singular
// points are ordinary? Searches multiplicity assignments satisfying the
// intersection count d(n-d) and a nonnegative deficiency for the piece.
enum class Split { Impossible, Possible, Undecided };
Split bezout_split(const SingularProfile& profile, int d);

enum class GenusMethod {
  SmoothCount,
  OrdinaryDeficiency,
  QuadraticTransformAdjusted,
  DeficiencyUpperBound,
  LinearComponent,
  Unsupported
};
const char* genus_method_name(GenusMethod m);

enum class Certificate {
  None,
  Smooth,
  BkqPattern,
  BezoutEnumeration,
  TwoBranchContact,
  LowDegreeDichotomy,
  Stated,
  LinearFactor
};
const char* certificate_name(Certificate c);

// `genus` is the smallest geometric genus among the irreducible components;
// for an irreducible curve that is its genus. When `exact` is false it is an
// upper bound.
struct DeficiencyReport {
  int delta = 0;
  std::optional<int> genus;
  GenusMethod method = GenusMethod::Unsupported;
  Certificate certificate = Certificate::None;
  bool exact = false;
};

DeficiencyReport genus_if_supported(const Analysis& a);
DeficiencyReport genus_if_supported(const PolynomialPair& pp, const PairMatching& pm);

}  // namespace sepvar
