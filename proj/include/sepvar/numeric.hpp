#pragma once

#include "sepvar/bigfloat.hpp"
#include "sepvar/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

// Disk in the complex plane guaranteed to hold the quantity it approximates.
struct ComplexApprox {
  BigFloat real;
  BigFloat imag;
  BigFloat radius;

  BigComplex center() const { return {real, imag}; }
};

// Aberth iteration followed by inclusion disks D(z_k, d |W_k|), W_k the
// Weierstrass correction. Throws std::invalid_argument unless p is
// nonconstant and squarefree.
std::vector<ComplexApprox> complex_roots(const Poly& p, int precision_bits);

bool disks_disjoint(const ComplexApprox& a, const ComplexApprox& b);

struct Cluster {
  ComplexApprox center;
  int count = 0;
};

struct ClusterReport {
  std::vector<Cluster> clusters;
  bool ambiguous = false;
};

// Overlapping disks are merged when both are below the coincidence scale
// 2^(-precision/2); an overlap of wider disks marks the report ambiguous.
ClusterReport cluster_disks(const std::vector<ComplexApprox>& disks, int precision_bits);

enum class NumericOutcome { Agree, Disagree, Ambiguous };
const char* numeric_outcome_name(NumericOutcome o);

struct NumericCheck {
  NumericOutcome outcome = NumericOutcome::Ambiguous;
  int precision_bits = 0;
  bool hyp_p = false;
  bool hyp_q = false;
  int l0 = 0;
  std::vector<PairClass> pair_classes;
  ClusterReport values;  // P and Q critical values together
  std::string detail;
};

inline constexpr int kDefaultPrecision = 256;
inline constexpr int kPrecisionCap = 4096;

// Recomputes Hypothesis I on both sides and the pair classes from
// approximated critical values, doubling precision on ambiguity.
NumericCheck verify_pair_counts(const Analysis& a, int precision_bits = kDefaultPrecision,
                                int cap = kPrecisionCap);
NumericCheck verify_pair_counts(const PolynomialPair& pp, const PairMatching& pm,
                                int precision_bits = kDefaultPrecision, int cap = kPrecisionCap);

// Empty when still ambiguous at the cap.
std::optional<bool> numeric_hypothesis_I(const Poly& p, int precision_bits = kDefaultPrecision,
                                         int cap = kPrecisionCap);

struct ProductCheck {
  bool within = false;
  double worst_ratio = 0;  // max |R(y) - prod| / bound over the sample
};

// Compares resultant_shift(S, P)(y) with prod (y - P(root)) for monic S.
ProductCheck check_product_formula(const Poly& S, const Poly& P, const std::vector<Rational>& ys,
                                   int precision_bits = kDefaultPrecision);

}  // namespace sepvar
