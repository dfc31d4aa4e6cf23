#pragma once

#include "sepvar/classifier.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepvar {

// Factor tags of a Wronskian-type form in homogeneous coordinates (z0:z1:z2).
// AlphaLine i = (z0 - a_i*z2), BetaLine j = (z1 - b_j*z2), Chord (i,j) = the
// line through the i-th and j-th matched singular points.
enum class Tag { Z0, Z1, Z2, AlphaLine, BetaLine, Chord };

struct FormFactor {
  Tag tag = Tag::Z0;
  int i = 0;
  int j = 0;
  int exponent = 1;
  std::string to_string() const;
  friend bool operator==(const FormFactor&, const FormFactor&) = default;
};

// Labelled critical points. Matched pair k (1-based) is (a_k, b_k); unmatched
// alpha points are a_{l0+1}, ..., unmatched beta points b_{l0+1}, ...
struct PointLayout {
  int n = 0;
  int m = 0;
  int z2_power = 0;  // exponent of z2 in dF/dz2
  std::vector<std::pair<int, int>> matched;  // (p, q)
  std::vector<int> alpha_extra;              // p of unmatched alpha points
  std::vector<int> beta_extra;               // q of unmatched beta points

  int alpha_multiplicity(int label) const;
  int beta_multiplicity(int label) const;
};

struct OneFormSpec {
  std::string name;
  std::string source_rule;
  std::vector<FormFactor> numerator;
  std::vector<FormFactor> denominator;
  std::pair<int, int> wronskian{1, 2};
  PointLayout layout;

  int numerator_degree() const;
  int denominator_degree() const;
  std::string to_string() const;
  std::vector<std::string> legend() const;
};

struct RegularityCheck {
  std::string point;
  std::string clause;
  bool satisfied = false;
  int margin = 0;
};

struct RegularityReport {
  std::vector<RegularityCheck> checks;
  bool overall = false;
};

struct MalformedForm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RegularityReport check_regularity(const OneFormSpec& form, const PairMatching& pm);
RegularityReport check_regularity(const OneFormSpec& form);

struct OrderBound {
  int ord0_lower = 0;
  int ratio0 = 0;  // (p+1) ord(z0 - a z2) = (q+1) ord(z1 - b z2)
  int ratio1 = 0;
};
OrderBound order_bounds(int p, int q);

struct WitnessPair {
  OneFormSpec first;
  OneFormSpec second;
  std::string proof_case;
  RegularityReport first_report;
  RegularityReport second_report;
  bool independence_by_no_linear_factor = true;
};

WitnessPair emit_witnesses(const Verdict& v, const Analysis& a);

}  // namespace sepvar
