#include "sepvar/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sepvar {

std::string rules::case_rule(int id) { return std::string(kCaseAnalysis) + " case " + std::to_string(id); }

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Hyperbolic:
      return "Hyperbolic";
    case Outcome::HasLowGenusComponent:
      return "HasLowGenusComponent";
    case Outcome::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Analysis analyze_pair(const PolynomialPair& pp) {
  Analysis a{pp, analyze(pp.p), analyze(pp.q), {}, false, false, std::nullopt, homogenized_meta(pp)};
  a.pm = match_pairs(a.cp, a.cq);
  a.hyp_p = hypothesis_I(a.cp);
  a.hyp_q = hypothesis_I(a.cq);
  a.linear_factor = find_linear_factor(pp);
  return a;
}

namespace {

// The equal-degree gap rule writes P as a_n x^n + a_n0 x^n0 + lower terms with
// a_n0 != 0; a bare monomial c x^n has no such term.
bool lower_term(const Poly& p) {
  for (int k = 0; k < p.degree(); ++k)
    if (p.coeff(k) != 0) return true;
  return false;
}

struct Sums {
  int alpha_excess = 0;  // sum over pairs with p > q of (p - q)
  int beta_excess = 0;
};

Sums excess(const PairMatching& pm) {
  Sums s;
  for (const auto& c : pm.pair_classes) {
    if (c.p > c.q) s.alpha_excess += (c.p - c.q) * c.count;
    if (c.q > c.p) s.beta_excess += (c.q - c.p) * c.count;
  }
  return s;
}

// One side of the lemma; `mirror` reads every pair as (q, p).
struct Side {
  int l0, l, excess, mass;
  std::vector<PairClass> pairs;
  std::vector<MassClass> unmatched;
};

Side side_of(const PairMatching& pm, bool mirror) {
  Sums s = excess(pm);
  Side sd{pm.l0, mirror ? pm.h : pm.l, mirror ? s.beta_excess : s.alpha_excess,
          mirror ? pm.unmatched_q_mass : pm.unmatched_p_mass, pm.pair_classes,
          mirror ? pm.unmatched_beta_classes : pm.unmatched_alpha_classes};
  if (mirror)
    for (auto& c : sd.pairs) std::swap(c.p, c.q);
  return sd;
}

bool all_pairs_have_p(const Side& s, int p) {
  return std::all_of(s.pairs.begin(), s.pairs.end(), [p](const PairClass& c) { return c.p == p; });
}

void lemma_side(const Side& s, const char* ra, const char* rb, const char* rc, std::vector<std::string>& out,
                std::vector<std::string>* notes) {
  if (s.l0 >= 2 && s.excess + s.mass == 2) out.push_back(ra);
  if (s.l0 >= 1 && s.mass == 2) {
    bool exception = s.l0 == 1 && s.pairs.size() == 1 && s.pairs[0].p == 1 && s.pairs[0].q == 3;
    if (!exception) out.push_back(rb);
  }
  if (s.l0 >= 2 && s.l == s.l0 + 1) {
    bool extra_is_simple = s.unmatched.size() == 1 && s.unmatched[0].multiplicity == 1;
    bool pairs_simple = all_pairs_have_p(s, 1);
    int hits = (s.l0 == 2) + extra_is_simple + pairs_simple;
    if (hits == 3) {
      if (notes) notes->push_back(std::string(rc) + " exception applies (l0=2, extra point and both pairs simple)");
    } else {
      if (notes && s.l0 == 2 && hits == 2)
        notes->push_back(std::string(rc) + " exception near-missed: two of its three equalities hold");
      out.push_back(rc);
    }
  }
}

std::string describe_pairs(const PairMatching& pm) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < pm.pair_classes.size(); ++i) {
    const auto& c = pm.pair_classes[i];
    out << (i ? ", " : "") << "(" << c.p << "," << c.q << ")x" << c.count;
  }
  out << "]";
  return out.str();
}

// Multiplicity -> number of critical points.
int count_with(const CriticalStructure& cs, int mult) {
  for (const auto& c : cs.classes)
    if (c.multiplicity == mult) return c.roots.degree();
  return 0;
}

int pair_count(const PairMatching& pm, int p, int q) {
  for (const auto& c : pm.pair_classes)
    if (c.p == p && c.q == q) return c.count;
  return 0;
}

std::vector<int> cases_of(const PolynomialPair& pp, const CriticalStructure& cp, const CriticalStructure& cq,
                          const PairMatching& pm, bool has_linear_factor) {
  std::vector<int> out;
  const int n = pp.n;
  if (has_linear_factor) out.push_back(1);
  if (n == 2 || n == 3) out.push_back(2);
  if (n == 4) {
    bool single_gap2 = pm.l0 == 1 && std::abs(pm.pair_classes[0].p - pm.pair_classes[0].q) == 2;
    if (pm.l0 >= 2 || single_gap2) out.push_back(3);
  }
  {
    bool direct = pm.l == 1 && pm.h == 2 && count_with(cp, n - 1) == 1 && count_with(cq, n - 2) == 1 &&
                  count_with(cq, 1) == 1 && pair_count(pm, n - 1, n - 2) == 1;
    bool mirror = pm.h == 1 && pm.l == 2 && count_with(cq, n - 1) == 1 && count_with(cp, n - 2) == 1 &&
                  count_with(cp, 1) == 1 && pair_count(pm, n - 2, n - 1) == 1;
    if (n >= 4 && (direct || mirror)) out.push_back(4);
  }
  if (n >= 4 && pm.l == 2 && pm.h == 2 && count_with(cp, n - 2) == 1 && count_with(cp, 1) == 1 &&
      count_with(cq, n - 2) == 1 && count_with(cq, 1) == 1 && pair_count(pm, n - 2, n - 2) >= 1)
    out.push_back(5);
  if (n == 5 && pm.l0 == 3 && pm.l == 3 && pm.h == 3 && pm.pair_classes.size() == 2 &&
      pair_count(pm, 2, 2) == 1 && pair_count(pm, 1, 1) == 2)
    out.push_back(6);
  if (n == 5 && pm.l0 == 2 && pm.l == 2 && pm.h == 2 && pm.pair_classes.size() == 1 && pair_count(pm, 2, 2) == 2)
    out.push_back(7);
  return out;
}

std::string case_parameters(const PolynomialPair& pp, const PairMatching& pm) {
  std::ostringstream out;
  out << "n=" << pp.n << " l=" << pm.l << " h=" << pm.h << " l0=" << pm.l0 << " pairs=" << describe_pairs(pm);
  return out.str();
}

}  // namespace

std::vector<std::string> sufficient_conditions(const PairMatching& pm, std::vector<std::string>* notes) {
  std::vector<std::string> out;
  lemma_side(side_of(pm, false), rules::kAlphaBig2a, rules::kAlphaBig2b, rules::kAlphaBig2c, out, notes);
  lemma_side(side_of(pm, true), rules::kBetaBig2a, rules::kBetaBig2b, rules::kBetaBig2c, out, notes);
  return out;
}

std::vector<int> all_theorem3_cases(const Analysis& a) {
  return cases_of(a.pair, a.cp, a.cq, a.pm, a.linear_factor.has_value());
}

std::optional<CaseId> match_theorem3_case(const Analysis& a) {
  auto ids = all_theorem3_cases(a);
  if (ids.empty()) return std::nullopt;
  return CaseId{ids.front(), case_parameters(a.pair, a.pm)};
}

std::optional<CaseId> match_theorem3_case(const PolynomialPair& pp, const CriticalStructure& cs_p,
                                          const CriticalStructure& cs_q, const PairMatching& pm) {
  auto ids = cases_of(pp, cs_p, cs_q, pm, find_linear_factor(pp).has_value());
  if (ids.empty()) return std::nullopt;
  return CaseId{ids.front(), case_parameters(pp, pm)};
}

Verdict classify(const Analysis& a) {
  const auto& pp = a.pair;
  const auto& pm = a.pm;
  Verdict v;
  v.swapped = pp.swapped;
  Evidence& ev = v.evidence;
  ev.n = pp.n;
  ev.m = pp.m;
  ev.n0 = pp.n0;
  ev.m0 = pp.m0;
  ev.hypothesis_I_p = a.hyp_p;
  ev.hypothesis_I_q = a.hyp_q;
  ev.l = pm.l;
  ev.h = pm.h;
  ev.l0 = pm.l0;
  ev.l1 = pm.l1;
  ev.theorem1_lhs = theorem1_lhs(pm);
  ev.corollary1_lhs = corollary1_lhs(pm);
  ev.linear_factor = a.linear_factor;

  const bool equal = pp.n == pp.m;
  const bool both_hyp = a.hyp_p && a.hyp_q;
  const bool lf = a.linear_factor.has_value();
  std::optional<CaseId> first_case;
  Outcome first_outcome = Outcome::Inconclusive;
  auto fire = [&](const std::string& rule, Outcome o) {
    if (ev.fired.empty()) first_outcome = o;
    ev.fired.push_back(rule);
  };

  if (equal && both_hyp) {
    ev.theorem3_cases = all_theorem3_cases(a);
    if (!ev.theorem3_cases.empty()) first_case = CaseId{ev.theorem3_cases.front(), case_parameters(pp, pm)};
  }

  if (lf) fire(equal && both_hyp ? rules::case_rule(1) : std::string(rules::kLinearFactor),
               Outcome::HasLowGenusComponent);
  const bool gap_form = lower_term(pp.p) && lower_term(pp.q);
  if (equal && !lf && gap_form && pp.n >= std::max(pp.n0, pp.m0) + 4)
    fire(rules::kEqualDegreeGap, Outcome::Hyperbolic);
  if (both_hyp && !lf) {
    if (ev.theorem1_lhs >= pp.n - pp.m + 3) fire(rules::kAlphaMass, Outcome::Hyperbolic);
    if (ev.corollary1_lhs >= 3) fire(rules::kBetaMass, Outcome::Hyperbolic);
    if (equal)
      for (const auto& r : sufficient_conditions(pm, &ev.notes)) fire(r, Outcome::Hyperbolic);
  }
  if (equal && both_hyp) {
    if (ev.theorem3_cases.empty())
      fire(rules::kCaseAnalysis, Outcome::Hyperbolic);
    else if (!lf)
      fire(rules::case_rule(ev.theorem3_cases.front()), Outcome::HasLowGenusComponent);
  }

  // A sufficient rule and a low-genus case at once would contradict the theory.
  if (!ev.theorem3_cases.empty() && !lf && ev.fired.size() > 1 && first_outcome == Outcome::Hyperbolic)
    ev.notes.push_back("conflict: sufficient rule fired alongside a low-genus case");

  if (ev.fired.empty()) {
    if (!a.hyp_p) ev.failed_hypotheses.push_back("Hypothesis I fails for P");
    if (!a.hyp_q) ev.failed_hypotheses.push_back("Hypothesis I fails for Q");
    if (!equal) {
      ev.failed_hypotheses.push_back("deg P != deg Q");
    } else if (pp.n < std::max(pp.n0, pp.m0) + 4) {
      ev.failed_hypotheses.push_back("n < max(n0, m0) + 4");
    } else if (!gap_form) {
      ev.failed_hypotheses.push_back("P or Q is a bare monomial, so a_n0 = 0");
    }
    if (both_hyp) {
      ev.failed_hypotheses.push_back("theorem1_lhs = " + std::to_string(ev.theorem1_lhs) + " < n - m + 3 = " +
                                     std::to_string(pp.n - pp.m + 3));
      ev.failed_hypotheses.push_back("corollary1_lhs = " + std::to_string(ev.corollary1_lhs) + " < 3");
    }
    v.outcome = Outcome::Inconclusive;
    v.rule = "none";
    return v;
  }

  v.outcome = first_outcome;
  v.rule = ev.fired.front();
  if (v.outcome == Outcome::HasLowGenusComponent && first_case && v.rule == rules::case_rule(first_case->id))
    v.case_id = first_case;
  return v;
}

Verdict classify(const PolynomialPair& pp) { return classify(analyze_pair(pp)); }

}  // namespace sepvar
