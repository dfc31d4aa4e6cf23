#include "sepvar/geometry.hpp"

#include <algorithm>
#include <map>

namespace sepvar {

SingularProfile singular_profile(const PolynomialPair& pp, const PairMatching& pm) {
  SingularProfile prof;
  prof.n = pp.n;
  prof.supported = pp.n == pp.m;
  if (!prof.supported) return prof;
  for (const auto& c : pm.pair_classes)
    for (int k = 0; k < c.count; ++k) prof.points.push_back({c.p, c.q, std::min(c.p, c.q) + 1, c.p == c.q});
  return prof;
}

SingularProfile ordinary_profile(int n, const std::vector<int>& multiplicities) {
  SingularProfile prof;
  prof.n = n;
  prof.supported = true;
  for (int m : multiplicities) prof.points.push_back({m - 1, m - 1, m, true});
  return prof;
}

int deficiency(const SingularProfile& profile) {
  int n = profile.n;
  int d = (n - 1) * (n - 2) / 2;
  for (const auto& pt : profile.points) d -= pt.multiplicity * (pt.multiplicity - 1) / 2;
  return d;
}

const char* irreducibility_name(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible:
      return "Irreducible";
    case Irreducibility::HasLinearComponent:
      return "HasLinearComponent";
    case Irreducibility::Unknown:
      return "Unknown";
  }
  return "?";
}

Irreducibility irreducibility_bkq(const SingularProfile& profile) {
  const auto& pts = profile.points;
  const int n = profile.n;
  bool ordinary = std::all_of(pts.begin(), pts.end(), [](const SingularPoint& s) { return s.ordinary; });
  if (!profile.supported || !ordinary) return Irreducibility::Unknown;
  if (pts.size() == 1 && (pts[0].multiplicity == n - 1 || pts[0].multiplicity == n - 2))
    return Irreducibility::Irreducible;
  if (pts.size() == 2) {
    int a = pts[0].multiplicity, b = pts[1].multiplicity;
    if ((a == n - 1 && b == 2) || (a == 2 && b == n - 1)) return Irreducibility::HasLinearComponent;
  }
  return Irreducibility::Unknown;
}

namespace {

struct SplitSearch {
  std::vector<std::pair<int, int>> groups;  // (multiplicity, number of points)
  int target = 0;                           // d(n - d)
  int genus_room = 0;                       // (d-1)(d-2)/2
  int max_t = 0;                            // multiplicity of the piece is at most d
  long budget = 2'000'000;
  bool exhausted = false;

  // Distribute the points of group g over piece multiplicities t = t0..max.
  bool run(std::size_t g, int t, int left, int inter, int used) {
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    if (inter > target || used > genus_room) return false;
    if (g == groups.size()) return inter == target;
    int m = groups[g].first;
    int top = std::min(m, max_t);
    if (t > top) {
      if (left != 0) return false;
      return run(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0, inter, used);
    }
    for (int k = left; k >= 0; --k) {
      // k points of this group get multiplicity t on the piece.
      if (run(g, t + 1, left - k, inter + k * t * (m - t), used + k * t * (t - 1) / 2)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

Split bezout_split(const SingularProfile& profile, int d) {
  std::map<int, int> groups;
  for (const auto& pt : profile.points) {
    if (!pt.ordinary) return Split::Undecided;
    ++groups[pt.multiplicity];
  }
  SplitSearch s;
  s.groups.assign(groups.begin(), groups.end());
  s.target = d * (profile.n - d);
  s.genus_room = (d - 1) * (d - 2) / 2;
  s.max_t = d;
  bool found = s.groups.empty() ? s.target == 0 : s.run(0, 0, s.groups[0].second, 0, 0);
  if (s.exhausted) return Split::Undecided;
  return found ? Split::Possible : Split::Impossible;
}

const char* genus_method_name(GenusMethod m) {
  switch (m) {
    case GenusMethod::SmoothCount:
      return "SmoothCount";
    case GenusMethod::OrdinaryDeficiency:
      return "OrdinaryDeficiency";
    case GenusMethod::QuadraticTransformAdjusted:
      return "QuadraticTransformAdjusted";
    case GenusMethod::DeficiencyUpperBound:
      return "DeficiencyUpperBound";
    case GenusMethod::LinearComponent:
      return "LinearComponent";
    case GenusMethod::Unsupported:
      return "Unsupported";
  }
  return "?";
}

const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::None:
      return "none";
    case Certificate::Smooth:
      return "smooth";
    case Certificate::BkqPattern:
      return "bkq-pattern";
    case Certificate::BezoutEnumeration:
      return "bezout-enumeration";
    case Certificate::TwoBranchContact:
      return "two-branch-contact";
    case Certificate::LowDegreeDichotomy:
      return "low-degree-dichotomy";
    case Certificate::Stated:
      return "stated";
    case Certificate::LinearFactor:
      return "linear-factor";
  }
  return "?";
}

namespace {

DeficiencyReport report(int delta, int genus, GenusMethod m, Certificate c, bool exact) {
  return {delta, genus, m, c, exact};
}

// True when no component of degree d <= n/2 can split off. Lines are ruled
// out separately by the linear-factor test.
bool bezout_irreducible(const SingularProfile& prof, bool line_excluded) {
  for (int d = 1; 2 * d <= prof.n; ++d) {
    if (d == 1 && line_excluded) continue;
    if (bezout_split(prof, d) != Split::Impossible) return false;
  }
  return true;
}

}  // namespace

DeficiencyReport genus_if_supported(const Analysis& a) {
  const auto& pp = a.pair;
  SingularProfile prof = singular_profile(pp, a.pm);
  DeficiencyReport out;
  if (!prof.supported) return out;
  const int n = pp.n;
  const int delta = deficiency(prof);
  out.delta = delta;

  if (a.linear_factor) return report(delta, 0, GenusMethod::LinearComponent, Certificate::LinearFactor, true);
  if (prof.points.empty())
    return report(delta, (n - 1) * (n - 2) / 2, GenusMethod::SmoothCount, Certificate::Smooth, true);

  bool ordinary = std::all_of(prof.points.begin(), prof.points.end(), [](const SingularPoint& s) { return s.ordinary; });
  if (ordinary) {
    if (irreducibility_bkq(prof) == Irreducibility::Irreducible)
      return report(delta, delta, GenusMethod::OrdinaryDeficiency, Certificate::BkqPattern, true);
    if (delta >= 0 && bezout_irreducible(prof, true))
      return report(delta, delta, GenusMethod::OrdinaryDeficiency, Certificate::BezoutEnumeration, true);
    // Degree <= 5: a reducible curve has a line or conic, both rational.
    if (n <= 5 && delta <= 0)
      return report(delta, 0, GenusMethod::DeficiencyUpperBound, Certificate::LowDegreeDichotomy, true);
    if (n <= 5 && delta == 1)
      return report(delta, 1, GenusMethod::DeficiencyUpperBound, Certificate::LowDegreeDichotomy, false);
    return out;
  }

  // A (3,1) point is a tacnode: two smooth branches with contact 2. Two
  // components through it would meet with multiplicity 2 < d(n-d) for n >= 4,
  // so the curve is irreducible and one blow-up leaves ordinary points.
  if (prof.points.size() == 1 && n >= 4) {
    const auto& s = prof.points[0];
    if ((s.p == 3 && s.q == 1) || (s.p == 1 && s.q == 3))
      return report(delta, delta - 1, GenusMethod::QuadraticTransformAdjusted, Certificate::TwoBranchContact, true);
  }
  // genus <= delta for irreducible curves.
  if (n <= 5 && delta <= 0)
    return report(delta, 0, GenusMethod::DeficiencyUpperBound, Certificate::LowDegreeDichotomy, true);
  if (prof.points.size() == 1 && prof.points[0].multiplicity == n - 1 && delta == 0)
    return report(delta, 0, GenusMethod::DeficiencyUpperBound, Certificate::Stated, true);
  if (n <= 5 && delta == 1)
    return report(delta, 1, GenusMethod::DeficiencyUpperBound, Certificate::LowDegreeDichotomy, false);
  return out;
}

DeficiencyReport genus_if_supported(const PolynomialPair& pp, const PairMatching& pm) {
  Analysis a = analyze_pair(pp);
  a.pm = pm;
  return genus_if_supported(a);
}

}  // namespace sepvar
