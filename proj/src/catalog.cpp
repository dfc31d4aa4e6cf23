#include "sepvar/catalog.hpp"

#include "sepvar/geometry.hpp"
#include "sepvar/parse.hpp"

#include <algorithm>

namespace sepvar {

namespace {

constexpr auto kHyp = Outcome::Hyperbolic;
constexpr auto kLow = Outcome::HasLowGenusComponent;
constexpr auto kNone = Outcome::Inconclusive;

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"case1-identity", "x^3 - 3*x", "x^3 - 3*x", kLow, "Theorem 3 case 1", 1, 0},
      {"case2-shifted-cubic", "x^3 - 3*x", "x^3 - 3*x + 1", kLow, "Theorem 3 case 2", 2, std::nullopt},
      {"case3-reflected-quartic", "1/4*x^4 - 4/3*x^3 + 3/2*x^2", "5/12 - 1/4*x^4 + 4/3*x^3 - 3/2*x^2", kLow,
       "Theorem 3 case 3", 3, std::nullopt},
      {"case3-power-quartic", "x^4", "1/4*x^4 - 4/3*x^3 + 3/2*x^2", kLow, "Theorem 3 case 3", 3, std::nullopt},
      {"case4-quintic", "x^5", "4*x^5 - 5*x^4", kLow, "Theorem 3 case 4", 4, 0},
      {"case4-quintic-mirror", "4*x^5 - 5*x^4", "x^5", kLow, "Theorem 3 case 4", 4, 0},
      {"case5-sextic", "5*x^6 - 6*x^5", "5*x^6 - 12*x^5", kLow, "Theorem 3 case 5", 5, std::nullopt},
      {"case6-quintic", "16*x^5 + 20*x^4 - 500*x^3", "12*x^5 + 195*x^4 + 750*x^3", kLow, "Theorem 3 case 6", 6, 1},
      {"case7-rescaled", "1/5*x^5 - 1/2*x^4 + 1/3*x^3", "1/160*x^5 - 1/32*x^4 + 1/24*x^3", kLow,
       "Theorem 3 case 1", 7, 0},
      {"equal-degree-gap", "x^7 + x", "x^7 + 2*x", kHyp, rules::kEqualDegreeGap, std::nullopt, std::nullopt},
      {"alpha-mass", "x^5", "x^5 + x", kHyp, rules::kAlphaMass, std::nullopt, std::nullopt},
      {"pure-cubes", "x^3", "x^3", kLow, "Theorem 3 case 1", 1, 0},
      {"unequal-degrees", "x^5", "x^2", kNone, "none", std::nullopt, std::nullopt},
      {"tacnode-quartic", "x^4", "x^4 - 2*x^2", kNone, "none", std::nullopt, 1},
  };
  return entries;
}

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> out;
  for (const auto& e : catalog()) {
    SelftestLine line{e.name, true, ""};
    try {
      Analysis a = analyze_pair(PolynomialPair(parse_poly(e.p), parse_poly(e.q)));
      Verdict v = classify(a);
      auto fail = [&](const std::string& why) {
        line.passed = false;
        if (!line.detail.empty()) line.detail += "; ";
        line.detail += why;
      };
      if (v.outcome != e.outcome) fail(std::string("outcome ") + outcome_name(v.outcome));
      if (v.rule != e.rule) fail("rule '" + v.rule + "'");
      if (e.listed_case) {
        const auto& cs = v.evidence.theorem3_cases;
        if (std::find(cs.begin(), cs.end(), *e.listed_case) == cs.end())
          fail("case " + std::to_string(*e.listed_case) + " not listed");
      }
      if (e.genus) {
        DeficiencyReport g = genus_if_supported(a);
        if (!g.genus || *g.genus != *e.genus)
          fail("genus " + (g.genus ? std::to_string(*g.genus) : std::string("unknown")));
      }
    } catch (const std::exception& ex) {
      line.passed = false;
      line.detail = ex.what();
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace sepvar
