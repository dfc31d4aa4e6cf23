#pragma once

#include "sepvar/critical.hpp"
#include "sepvar/linear_factor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

// Rule identifiers as they appear in reports.
namespace rules {
inline constexpr const char* kLinearFactor = "linear factor";
inline constexpr const char* kEqualDegreeGap = "Theorem 2";
inline constexpr const char* kAlphaMass = "Theorem 1";
inline constexpr const char* kBetaMass = "Corollary 1";
inline constexpr const char* kAlphaBig2a = "big2(a)";
inline constexpr const char* kAlphaBig2b = "big2(b)";
inline constexpr const char* kAlphaBig2c = "big2(c)";
inline constexpr const char* kBetaBig2a = "big2c(a)";
inline constexpr const char* kBetaBig2b = "big2c(b)";
inline constexpr const char* kBetaBig2c = "big2c(c)";
inline constexpr const char* kCaseAnalysis = "Theorem 3";
std::string case_rule(int id);  // "Theorem 3 case <id>"
}  // namespace rules

enum class Outcome { Hyperbolic, HasLowGenusComponent, Inconclusive };
const char* outcome_name(Outcome o);

// Everything the classifier and oracles derive from one pair.
struct Analysis {
  PolynomialPair pair;
  CriticalStructure cp;
  CriticalStructure cq;
  PairMatching pm;
  bool hyp_p = false;
  bool hyp_q = false;
  std::optional<LinearFactorWitness> linear_factor;
  HomogenizedCurveMeta meta;
};

Analysis analyze_pair(const PolynomialPair& pp);

struct CaseId {
  int id = 0;
  std::string parameters;
};

struct Evidence {
  int n = 0, m = 0, n0 = 0, m0 = 0;
  bool hypothesis_I_p = false;
  bool hypothesis_I_q = false;
  int l = 0, h = 0, l0 = 0, l1 = 0;
  int theorem1_lhs = 0;
  int corollary1_lhs = 0;
  std::optional<LinearFactorWitness> linear_factor;
  std::vector<std::string> fired;      // every rule whose hypotheses hold, in cascade order
  std::vector<int> theorem3_cases;     // every matching case id when the case analysis applies
  std::vector<std::string> failed_hypotheses;
  std::vector<std::string> notes;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string rule;
  std::optional<CaseId> case_id;
  Evidence evidence;
  bool swapped = false;
};

Verdict classify(const Analysis& a);
Verdict classify(const PolynomialPair& pp);

// Requires n = m and Hypothesis I on both sides.
std::optional<CaseId> match_theorem3_case(const Analysis& a);
std::optional<CaseId> match_theorem3_case(const PolynomialPair& pp, const CriticalStructure& cs_p,
                                          const CriticalStructure& cs_q, const PairMatching& pm);
std::vector<int> all_theorem3_cases(const Analysis& a);

// Sufficient conditions of the l0-based lemma and its mirror, n = m.
std::vector<std::string> sufficient_conditions(const PairMatching& pm, std::vector<std::string>* notes = nullptr);

}  // namespace sepvar
