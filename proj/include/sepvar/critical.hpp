#pragma once

#include "sepvar/poly.hpp"

#include <vector>

namespace sepvar {

// One multiplicity class of P': the roots of `roots` are the critical points
// of multiplicity exactly `multiplicity`, and `values` = prod (y - P(a)).
struct CriticalClass {
  Poly roots;
  int multiplicity = 0;
  Poly values;
};

struct CriticalStructure {
  std::vector<CriticalClass> classes;  // increasing multiplicity
  int distinct_points = 0;             // l (or h for Q)
  int degree = 0;
};

CriticalStructure analyze(const Poly& p);
bool hypothesis_I(const Poly& p);
bool hypothesis_I(const CriticalStructure& cs);

// P, Q normalized so that deg P >= deg Q; both of degree >= 2.
struct PolynomialPair {
  Poly p;
  Poly q;
  int n = 0;
  int m = 0;
  int n0 = 0;
  int m0 = 0;
  bool swapped = false;

  PolynomialPair(Poly P, Poly Q);
};

// Largest k in [1, deg p) with a nonzero coefficient, 0 if none.
int intermediate_degree(const Poly& p);

struct PairClass {
  int p = 0;
  int q = 0;
  int count = 0;
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

struct MassClass {
  int multiplicity = 0;
  int count = 0;
  friend bool operator==(const MassClass&, const MassClass&) = default;
};

struct PairMatching {
  std::vector<PairClass> pair_classes;  // sorted by (p, q), counts > 0
  int l0 = 0;
  int l1 = 0;
  int l = 0;
  int h = 0;
  int unmatched_p_mass = 0;
  int unmatched_q_mass = 0;
  int unmatched_alpha_count = 0;
  int unmatched_beta_count = 0;
  std::vector<MassClass> unmatched_alpha_classes;
  std::vector<MassClass> unmatched_beta_classes;
};

PairMatching match_pairs(const PolynomialPair& pp);
PairMatching match_pairs(const CriticalStructure& cp, const CriticalStructure& cq);

int theorem1_lhs(const PairMatching& pm);
int corollary1_lhs(const PairMatching& pm);

struct HomogenizedCurveMeta {
  int mprime = 0;
  int mdoubleprime = 0;
  int z2_power_in_dF_dz2 = 0;
};

HomogenizedCurveMeta homogenized_meta(const PolynomialPair& pp);

}  // namespace sepvar
