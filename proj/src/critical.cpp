#include "sepvar/critical.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sepvar {

CriticalStructure analyze(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("linear polynomial excluded");
  CriticalStructure cs;
  cs.degree = p.degree();
  for (auto& part : squarefree_decomposition(derivative(p)).parts) {
    CriticalClass cc;
    cc.values = resultant_shift(part.factor, p);
    cc.roots = std::move(part.factor);
    cc.multiplicity = part.multiplicity;
    cs.distinct_points += cc.roots.degree();
    cs.classes.push_back(std::move(cc));
  }
  return cs;
}

bool hypothesis_I(const CriticalStructure& cs) {
  Poly all = Poly::constant(1);
  for (const auto& cc : cs.classes) all = all * cc.values;
  return is_squarefree(all);
}

bool hypothesis_I(const Poly& p) {
  if (p.degree() < 2) throw std::invalid_argument("linear polynomial excluded");
  return is_squarefree(resultant_shift(squarefree_part(derivative(p)), p));
}

int intermediate_degree(const Poly& p) {
  for (int k = p.degree() - 1; k >= 1; --k)
    if (p.coeff(k) != 0) return k;
  return 0;
}

PolynomialPair::PolynomialPair(Poly P, Poly Q) {
  if (P.degree() < 2 || Q.degree() < 2) throw std::invalid_argument("linear polynomial excluded");
  if (P.degree() < Q.degree()) {
    std::swap(P, Q);
    swapped = true;
  }
  p = std::move(P);
  q = std::move(Q);
  n = p.degree();
  m = q.degree();
  n0 = intermediate_degree(p);
  m0 = intermediate_degree(q);
}

namespace {

struct ValueParts {
  int multiplicity;
  std::vector<MultiplicityPart> parts;
};

std::vector<ValueParts> value_parts(const CriticalStructure& cs) {
  std::vector<ValueParts> out;
  for (const auto& cc : cs.classes)
    out.push_back({cc.multiplicity, squarefree_decomposition(cc.values).parts});
  return out;
}

Poly all_values(const CriticalStructure& cs) {
  Poly acc = Poly::constant(1);
  for (const auto& cc : cs.classes) acc = acc * cc.values;
  return squarefree_part(acc);
}

// Points of each class whose value is not a value of the other side.
std::vector<MassClass> unmatched(const std::vector<ValueParts>& side, const Poly& other_values) {
  std::vector<MassClass> out;
  for (const auto& vp : side) {
    int count = 0;
    for (const auto& part : vp.parts)
      count += part.multiplicity * (part.factor.degree() - gcd(part.factor, other_values).degree());
    if (count > 0) out.push_back({vp.multiplicity, count});
  }
  return out;
}

}  // namespace

PairMatching match_pairs(const CriticalStructure& cp, const CriticalStructure& cq) {
  PairMatching pm;
  pm.l = cp.distinct_points;
  pm.h = cq.distinct_points;
  auto vp = value_parts(cp);
  auto vq = value_parts(cq);
  for (const auto& a : vp)
    for (const auto& b : vq) {
      int count = 0;
      for (const auto& x : a.parts)
        for (const auto& y : b.parts)
          count += x.multiplicity * y.multiplicity * gcd(x.factor, y.factor).degree();
      if (count == 0) continue;
      pm.pair_classes.push_back({a.multiplicity, b.multiplicity, count});
      pm.l0 += count;
      if (a.multiplicity > b.multiplicity) pm.l1 += count;
    }
  std::sort(pm.pair_classes.begin(), pm.pair_classes.end(),
            [](const PairClass& x, const PairClass& y) { return std::pair(x.p, x.q) < std::pair(y.p, y.q); });

  pm.unmatched_alpha_classes = unmatched(vp, all_values(cq));
  pm.unmatched_beta_classes = unmatched(vq, all_values(cp));
  for (const auto& c : pm.unmatched_alpha_classes) {
    pm.unmatched_alpha_count += c.count;
    pm.unmatched_p_mass += c.count * c.multiplicity;
  }
  for (const auto& c : pm.unmatched_beta_classes) {
    pm.unmatched_beta_count += c.count;
    pm.unmatched_q_mass += c.count * c.multiplicity;
  }
  return pm;
}

PairMatching match_pairs(const PolynomialPair& pp) { return match_pairs(analyze(pp.p), analyze(pp.q)); }

int theorem1_lhs(const PairMatching& pm) {
  int s = pm.unmatched_p_mass;
  for (const auto& c : pm.pair_classes)
    if (c.p > c.q) s += (c.p - c.q) * c.count;
  return s;
}

int corollary1_lhs(const PairMatching& pm) {
  int s = pm.unmatched_q_mass;
  for (const auto& c : pm.pair_classes)
    if (c.q > c.p) s += (c.q - c.p) * c.count;
  return s;
}

HomogenizedCurveMeta homogenized_meta(const PolynomialPair& pp) {
  HomogenizedCurveMeta meta;
  if (pp.n == pp.m) {
    meta.mprime = std::max(pp.n0, pp.m0);
    meta.mdoubleprime = pp.m0;
  } else {
    meta.mprime = std::max(pp.n0, pp.m);
    meta.mdoubleprime = pp.m;
  }
  meta.z2_power_in_dF_dz2 = pp.n - meta.mprime - 1;
  return meta;
}

}  // namespace sepvar
