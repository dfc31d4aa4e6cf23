#include "sepvar/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace sepvar {

std::string FormFactor::to_string() const {
  std::string base;
  switch (tag) {
    case Tag::Z0:
      base = "z0";
      break;
    case Tag::Z1:
      base = "z1";
      break;
    case Tag::Z2:
      base = "z2";
      break;
    case Tag::AlphaLine:
      base = "(z0 - a" + std::to_string(i) + "*z2)";
      break;
    case Tag::BetaLine:
      base = "(z1 - b" + std::to_string(i) + "*z2)";
      break;
    case Tag::Chord:
      base = "L(" + std::to_string(i) + "," + std::to_string(j) + ")";
      break;
  }
  if (exponent != 1) base += "^" + std::to_string(exponent);
  return base;
}

int PointLayout::alpha_multiplicity(int label) const {
  int l0 = static_cast<int>(matched.size());
  if (label >= 1 && label <= l0) return matched[label - 1].first;
  if (label > l0 && label <= l0 + static_cast<int>(alpha_extra.size())) return alpha_extra[label - l0 - 1];
  return 0;
}

int PointLayout::beta_multiplicity(int label) const {
  int l0 = static_cast<int>(matched.size());
  if (label >= 1 && label <= l0) return matched[label - 1].second;
  if (label > l0 && label <= l0 + static_cast<int>(beta_extra.size())) return beta_extra[label - l0 - 1];
  return 0;
}

namespace {

std::vector<FormFactor> normalized(const std::vector<FormFactor>& fs) {
  std::vector<FormFactor> out;
  for (const auto& f : fs) {
    if (f.exponent < 0) throw MalformedForm("negative exponent in " + f.to_string());
    if (f.exponent == 0) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const FormFactor& g) { return g.tag == f.tag && g.i == f.i && g.j == f.j; });
    if (it == out.end())
      out.push_back(f);
    else
      it->exponent += f.exponent;
  }
  return out;
}

int degree_of(const std::vector<FormFactor>& fs) {
  int d = 0;
  for (const auto& f : fs) d += f.exponent;
  return d;
}

std::string product(const std::vector<FormFactor>& fs) {
  std::string s;
  for (std::size_t k = 0; k < fs.size(); ++k) s += (k ? " * " : "") + fs[k].to_string();
  return s;
}

std::string wronskian_text(std::pair<int, int> w) {
  return "W(z" + std::to_string(w.first) + ",z" + std::to_string(w.second) + ")";
}

// Index k of the partial derivative dF/dz_k paired with W(z_i, z_j).
int partial_index(std::pair<int, int> w) { return 3 - w.first - w.second; }

}  // namespace

int OneFormSpec::numerator_degree() const { return degree_of(numerator); }
int OneFormSpec::denominator_degree() const { return degree_of(denominator); }

std::string OneFormSpec::to_string() const {
  std::string num = product(numerator);
  num += (num.empty() ? "" : " * ") + wronskian_text(wronskian);
  if (denominator.empty()) return num;
  std::string den = product(denominator);
  if (denominator.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

std::vector<std::string> OneFormSpec::legend() const {
  std::vector<int> alphas, betas;
  auto note = [&](const FormFactor& f) {
    if (f.tag == Tag::AlphaLine) alphas.push_back(f.i);
    if (f.tag == Tag::BetaLine) betas.push_back(f.i);
    if (f.tag == Tag::Chord) {
      alphas.push_back(f.i);
      alphas.push_back(f.j);
    }
  };
  for (const auto& f : numerator) note(f);
  for (const auto& f : denominator) note(f);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

  int l0 = static_cast<int>(layout.matched.size());
  std::vector<std::string> out;
  for (int a : alphas) {
    std::ostringstream s;
    s << "a" << a << ": p=" << layout.alpha_multiplicity(a);
    if (a <= l0) s << ", P(a" << a << ") = Q(b" << a << "), q=" << layout.beta_multiplicity(a);
    else s << ", unmatched";
    out.push_back(s.str());
  }
  for (int b : betas) {
    if (b <= l0 && std::binary_search(alphas.begin(), alphas.end(), b)) continue;
    std::ostringstream s;
    s << "b" << b << ": q=" << layout.beta_multiplicity(b);
    if (b <= l0) s << ", Q(b" << b << ") = P(a" << b << "), p=" << layout.alpha_multiplicity(b);
    else s << ", unmatched";
    out.push_back(s.str());
  }
  return out;
}

OrderBound order_bounds(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("order_bounds needs p, q >= 1");
  int g = std::gcd(p + 1, q + 1);
  int bound = (q + 1) / g;
  if (q == p + 2 && p >= 2) bound = std::max({bound, 3, (p + 4) / 2});
  return {bound, p + 1, q + 1};
}

namespace {

// Order of W(z1,z2), W(z2,z0) or W(z0,z1), selected by the form's pair.
int wronskian_order(std::pair<int, int> w, int w12, int w20, int w01) {
  int k = partial_index(w);
  if (k == 0) return w12;
  if (k == 1) return w20;
  return w01;
}

}  // namespace

RegularityReport check_regularity(const OneFormSpec& form) {
  RegularityReport rep;
  const auto num = normalized(form.numerator);
  const auto den = normalized(form.denominator);
  const auto& lay = form.layout;
  const int l0 = static_cast<int>(lay.matched.size());

  if (degree_of(den) != degree_of(num) + 2)
    throw MalformedForm("degree balance violated: " + form.to_string());
  rep.checks.push_back({"form", "degree balance", true, degree_of(den) - degree_of(num) - 2});

  // Key condition: the denominator divides the partial derivative paired
  // with the Wronskian.
  {
    int k = partial_index(form.wronskian);
    bool ok = true;
    int slack = 1 << 20;
    for (const auto& f : den) {
      int room = -1;
      if (k == 0 && f.tag == Tag::AlphaLine) room = lay.alpha_multiplicity(f.i);
      if (k == 1 && f.tag == Tag::BetaLine) room = lay.beta_multiplicity(f.i);
      if (k == 1 && f.tag == Tag::Z2) room = lay.n - lay.m;
      if (k == 2 && f.tag == Tag::Z2) room = lay.z2_power;
      slack = std::min(slack, room - f.exponent);
      if (room < f.exponent) ok = false;
    }
    if (den.empty()) slack = 0;
    rep.checks.push_back({"dF/dz" + std::to_string(k), "denominator divides partial derivative", ok, slack});
  }

  // Matched singular points, branch orders a = (q+1)/g, b = (p+1)/g.
  for (int idx = 1; idx <= l0; ++idx) {
    auto [p, q] = lay.matched[idx - 1];
    int g = std::gcd(p + 1, q + 1);
    int a = (q + 1) / g, b = (p + 1) / g;
    bool known = true;
    int total = 0;
    for (const auto& f : num) {
      int o = 0;
      if (f.tag == Tag::AlphaLine && f.i == idx) o = a;
      if (f.tag == Tag::BetaLine && f.i == idx) o = b;
      if (f.tag == Tag::Chord && (f.i == idx || f.j == idx)) o = std::min(a, b);
      total += o * f.exponent;
    }
    for (const auto& f : den) {
      int o = 0;
      switch (f.tag) {
        case Tag::AlphaLine:
          o = f.i == idx ? a : 0;
          break;
        case Tag::BetaLine:
          o = f.i == idx ? b : 0;
          break;
        case Tag::Z2:
          o = 0;
          break;
        default:
          known = false;  // could vanish here; no upper bound
      }
      total -= o * f.exponent;
    }
    total += wronskian_order(form.wronskian, b - 1, a - 1, std::min(a, b) - 1);
    std::ostringstream pt;
    pt << "(a" << idx << ",b" << idx << ") p=" << p << " q=" << q;
    bool ok = known && total >= 0;
    rep.checks.push_back({pt.str(), "branch orders (p+1):(q+1)", ok, total});
  }

  // (0:1:0) is the only point at infinity when n > m.
  if (lay.n > lay.m) {
    int g = std::gcd(lay.n, lay.n - lay.m);
    int A = (lay.n - lay.m) / g, B = lay.n / g;
    auto ord = [&](const FormFactor& f) {
      switch (f.tag) {
        case Tag::Z0:
        case Tag::AlphaLine:
          return A;
        case Tag::Z2:
          return B;
        default:
          return 0;
      }
    };
    int total = 0;
    for (const auto& f : num) total += ord(f) * f.exponent;
    for (const auto& f : den) total -= ord(f) * f.exponent;
    total += wronskian_order(form.wronskian, B - 1, A + B - 1, A - 1);
    rep.checks.push_back({"(0:1:0)", "branch orders n:(n-m)", total >= 0, total});
  }

  rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(), [](const RegularityCheck& c) { return c.satisfied; });
  return rep;
}

RegularityReport check_regularity(const OneFormSpec& form, const PairMatching& pm) {
  RegularityReport rep = check_regularity(form);
  // The layout must be an arrangement of the aggregate matching.
  std::map<std::pair<int, int>, int> want, have;
  for (const auto& c : pm.pair_classes) want[{c.p, c.q}] += c.count;
  for (const auto& pq : form.layout.matched) have[pq] += 1;
  std::map<int, int> wa, ha, wb, hb;
  for (const auto& c : pm.unmatched_alpha_classes) wa[c.multiplicity] += c.count;
  for (const auto& c : pm.unmatched_beta_classes) wb[c.multiplicity] += c.count;
  for (int p : form.layout.alpha_extra) ha[p] += 1;
  for (int q : form.layout.beta_extra) hb[q] += 1;
  bool ok = want == have && wa == ha && wb == hb;
  rep.checks.insert(rep.checks.begin(), {"layout", "labels match the pair classes", ok, 0});
  rep.overall = rep.overall && ok;
  return rep;
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// Builds forms in the frame of one side: "own" lines are the side's critical
// lines, "other" lines the opposite side's. The mirror frame exchanges
// z0 <-> z1, alpha <-> beta and W(z1,z2) <-> W(z2,z0).
struct Frame {
  bool mirror = false;
  PointLayout layout;

  int own(int k) const { return mirror ? layout.beta_multiplicity(k) : layout.alpha_multiplicity(k); }
  int other(int k) const { return mirror ? layout.alpha_multiplicity(k) : layout.beta_multiplicity(k); }
  int l0() const { return static_cast<int>(layout.matched.size()); }
  const std::vector<int>& own_extra() const { return mirror ? layout.beta_extra : layout.alpha_extra; }

  FormFactor O(int k, int e = 1) const { return {mirror ? Tag::BetaLine : Tag::AlphaLine, k, 0, e}; }
  FormFactor T(int k, int e = 1) const { return {mirror ? Tag::AlphaLine : Tag::BetaLine, k, 0, e}; }
  FormFactor coord(int e = 1) const { return {mirror ? Tag::Z1 : Tag::Z0, 0, 0, e}; }
  static FormFactor L(int i, int j, int e = 1) { return {Tag::Chord, i, j, e}; }
  static FormFactor Z2(int e) { return {Tag::Z2, 0, 0, e}; }
  std::pair<int, int> W() const { return mirror ? std::pair{2, 0} : std::pair{1, 2}; }

  std::optional<OneFormSpec> form(const std::string& name, const std::string& rule, std::vector<FormFactor> num,
                                  std::vector<FormFactor> den, std::optional<std::pair<int, int>> w = {}) const {
    for (const auto& f : num)
      if (f.exponent < 0) return std::nullopt;
    for (const auto& f : den)
      if (f.exponent < 0) return std::nullopt;
    OneFormSpec s;
    s.name = name;
    s.source_rule = rule;
    s.numerator = normalized(num);
    s.denominator = normalized(den);
    s.wronskian = w.value_or(W());
    s.layout = layout;
    return s;
  }

  std::vector<FormFactor> extras_den() const {
    std::vector<FormFactor> out;
    const auto& ex = own_extra();
    for (std::size_t k = 0; k < ex.size(); ++k) out.push_back(O(l0() + 1 + static_cast<int>(k), ex[k]));
    return out;
  }
};

struct Candidate {
  std::string proof_case;
  OneFormSpec first, second;
};

using Emit = std::function<void(Candidate)>;

void add(const Emit& emit, const std::string& pc, std::optional<OneFormSpec> a, std::optional<OneFormSpec> b) {
  if (a && b) emit({pc, std::move(*a), std::move(*b)});
}

Frame frame_for(const Analysis& an, const Pairs& matched, bool mirror) {
  Frame f;
  f.mirror = mirror;
  f.layout.n = an.pair.n;
  f.layout.m = an.pair.m;
  f.layout.z2_power = an.meta.z2_power_in_dF_dz2;
  f.layout.matched = matched;
  for (const auto& c : an.pm.unmatched_alpha_classes) f.layout.alpha_extra.insert(f.layout.alpha_extra.end(), c.count, c.multiplicity);
  for (const auto& c : an.pm.unmatched_beta_classes) f.layout.beta_extra.insert(f.layout.beta_extra.end(), c.count, c.multiplicity);
  std::sort(f.layout.alpha_extra.rbegin(), f.layout.alpha_extra.rend());
  std::sort(f.layout.beta_extra.rbegin(), f.layout.beta_extra.rend());
  return f;
}

Pairs base_pairs(const PairMatching& pm) {
  Pairs out;
  for (auto it = pm.pair_classes.rbegin(); it != pm.pair_classes.rend(); ++it)
    out.insert(out.end(), it->count, {it->p, it->q});
  return out;
}

// In the given frame, own/other multiplicities of a raw (p, q) pair.
std::pair<int, int> oriented(const std::pair<int, int>& pq, bool mirror) {
  return mirror ? std::pair{pq.second, pq.first} : pq;
}

// Orderings that put a pair satisfying `first` at label 1 and a pair
// satisfying `second` at label 2, keeping the rest in base order.
std::vector<Pairs> lead_orderings(const Pairs& base, bool mirror,
                                  const std::function<bool(int, int)>& first,
                                  const std::function<bool(int, int)>& second) {
  std::vector<Pairs> out;
  std::set<Pairs> seen;
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto [o1, t1] = oriented(base[i], mirror);
    if (!first(o1, t1)) continue;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (j == i) continue;
      auto [o2, t2] = oriented(base[j], mirror);
      if (!second(o2, t2)) continue;
      Pairs p{base[i], base[j]};
      for (std::size_t k = 0; k < base.size(); ++k)
        if (k != i && k != j) p.push_back(base[k]);
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

const auto any_pair = [](int, int) { return true; };

// Proof cases of the l0-based lemma, in the frame's orientation.
void lemma_gap_two(const Frame& f, const std::string& rule, const Emit& emit) {
  int p1 = f.own(1);
  add(emit, std::string(f.mirror ? "mirrored " : "") + "gap-two pair",
      f.form("first", rule, {f.T(1, p1 - 2)}, {f.O(1, p1)}),
      f.form("second", rule, {Frame::L(1, 2, 2), f.T(1, p1 - 3)}, {f.O(1, p1), f.O(2)}));
}

void lemma_two_gap_one(const Frame& f, const std::string& rule, const Emit& emit) {
  int p1 = f.own(1), p2 = f.own(2);
  add(emit, std::string(f.mirror ? "mirrored " : "") + "two gap-one pairs",
      f.form("first", rule, {f.T(1, p1 - 1), f.T(2, p2 - 1)}, {f.O(1, p1), f.O(2, p2)}),
      f.form("second", rule, {Frame::L(1, 2), f.T(1, p1 - 2), f.T(2, p2 - 1)}, {f.O(1, p1), f.O(2, p2)}));
}

void lemma_gap_one_extra(const Frame& f, const std::string& rule, const Emit& emit) {
  if (f.own_extra().size() != 1) return;
  int x = f.l0() + 1;
  std::vector<FormFactor> den{f.O(1, 2), f.O(2), f.O(x)};
  add(emit, std::string(f.mirror ? "mirrored " : "") + "gap-one pair with one extra point",
      f.form("first", rule, {Frame::L(1, 2, 2)}, den), f.form("second", rule, {f.T(1), Frame::L(1, 2)}, den));
}

void lemma_extra_mass_two(const Frame& f, const std::string& rule, const Emit& emit) {
  auto ex = f.extras_den();
  std::optional<OneFormSpec> second;
  if (f.l0() >= 2) {
    std::vector<FormFactor> den{f.O(1), f.O(2)};
    den.insert(den.end(), ex.begin(), ex.end());
    second = f.form("second", rule, {Frame::L(1, 2, 2)}, den);
  } else {
    std::vector<FormFactor> den{f.O(1)};
    den.insert(den.end(), ex.begin(), ex.end());
    second = f.form("second", rule, {f.T(1)}, den);
  }
  add(emit, std::string(f.mirror ? "mirrored " : "") + "unmatched mass two", f.form("first", rule, {}, ex), second);
}

void lemma_single_extra(const Frame& f, const std::string& rule, const Emit& emit) {
  if (f.own_extra().size() != 1) return;
  int x = f.l0() + 1;
  std::optional<OneFormSpec> second;
  if (f.own(1) >= 2)
    second = f.form("second", rule, {Frame::L(1, 2, 2)}, {f.O(1, 2), f.O(2), f.O(x)});
  else if (f.l0() >= 3)
    second = f.form("second", rule, {Frame::L(1, 2), Frame::L(1, 3)}, {f.O(1), f.O(2), f.O(3), f.O(x)});
  add(emit, std::string(f.mirror ? "mirrored " : "") + "single extra point",
      f.form("first", rule, {Frame::L(1, 2)}, {f.O(1), f.O(2), f.O(x)}), second);
}

void mass_sum(const Analysis& an, bool mirror, const std::string& rule, const Emit& emit) {
  Pairs base = base_pairs(an.pm);
  Pairs ordered;
  for (const auto& pq : base)
    if (oriented(pq, mirror).first > oriented(pq, mirror).second) ordered.push_back(pq);
  int top = static_cast<int>(ordered.size());
  for (const auto& pq : base)
    if (oriented(pq, mirror).first <= oriented(pq, mirror).second) ordered.push_back(pq);
  Frame f = frame_for(an, ordered, mirror);
  int E = mirror ? corollary1_lhs(an.pm) : theorem1_lhs(an.pm);
  std::vector<FormFactor> lines, den;
  for (int k = 1; k <= top; ++k) {
    lines.push_back(f.T(k, f.other(k)));
    den.push_back(f.O(k, f.own(k)));
  }
  auto ex = f.extras_den();
  den.insert(den.end(), ex.begin(), ex.end());
  std::vector<FormFactor> n1{f.coord(), Frame::Z2(E - 3)}, n2{Frame::Z2(E - 2)};
  n1.insert(n1.end(), lines.begin(), lines.end());
  n2.insert(n2.end(), lines.begin(), lines.end());
  add(emit, mirror ? "mirrored mass sum" : "mass sum", f.form("first", rule, n1, den), f.form("second", rule, n2, den));
}

// Picks the proof case for the sub-rule that fired, then tries label orders.
void lemma(const Analysis& an, bool mirror, char sub, const std::string& rule, const Emit& emit) {
  Pairs base = base_pairs(an.pm);
  int mass = mirror ? an.pm.unmatched_q_mass : an.pm.unmatched_p_mass;
  auto has_gap = [&](bool mir, int d) {
    return std::any_of(base.begin(), base.end(), [&](const auto& pq) {
      auto o = oriented(pq, mir);
      return o.first - o.second == d;
    });
  };
  auto gap = [](int d) { return std::function<bool(int, int)>([d](int o, int t) { return o - t == d; }); };
  auto run = [&](bool mir, const std::function<bool(int, int)>& first, const std::function<bool(int, int)>& second,
                 void (*builder)(const Frame&, const std::string&, const Emit&)) {
    for (const auto& ord : lead_orderings(base, mir, first, second)) builder(frame_for(an, ord, mir), rule, emit);
  };
  auto sorted_by_own = [&](bool mir) {
    Pairs by_own = base;
    std::stable_sort(by_own.begin(), by_own.end(), [&](const auto& x, const auto& y) {
      return oriented(x, mir).first > oriented(y, mir).first;
    });
    return by_own;
  };

  if (sub == 'b' || mass == 2) {
    lemma_extra_mass_two(frame_for(an, sorted_by_own(mirror), mirror), rule, emit);
    run(mirror, any_pair, any_pair, lemma_extra_mass_two);
    return;
  }
  if (has_gap(mirror, 2)) {
    run(mirror, gap(2), any_pair, lemma_gap_two);
  } else if (has_gap(!mirror, 2)) {
    run(!mirror, gap(2), any_pair, lemma_gap_two);
  } else if (mass == 1 && has_gap(mirror, 1)) {
    run(mirror, gap(1), any_pair, lemma_gap_one_extra);
  } else if (mass == 0) {
    run(mirror, gap(1), gap(1), lemma_two_gap_one);
  } else {
    lemma_single_extra(frame_for(an, sorted_by_own(mirror), mirror), rule, emit);
    run(mirror, any_pair, any_pair, lemma_single_extra);
  }
}

void infinity_forms(const Analysis& an, const std::string& rule, const Emit& emit) {
  Frame f = frame_for(an, base_pairs(an.pm), false);
  add(emit, "z2 at infinity", f.form("first", rule, {}, {Frame::Z2(2)}, std::pair{0, 1}),
      f.form("second", rule, {{Tag::Z0, 0, 0, 1}}, {Frame::Z2(3)}, std::pair{0, 1}));
}

void case_analysis(const Analysis& an, const std::string& rule, const Emit& emit) {
  Pairs base = base_pairs(an.pm);
  for (bool mir : {false, true}) {
    for (bool tie_desc : {false, true}) {
      Pairs ord = base;
      std::stable_sort(ord.begin(), ord.end(), [&](const auto& x, const auto& y) {
        auto a = oriented(x, mir), b = oriented(y, mir);
        if (a.first != b.first) return a.first > b.first;
        return tie_desc ? a.second > b.second : a.second < b.second;
      });
      Frame f = frame_for(an, ord, mir);
      int l0 = f.l0();
      if (l0 < 2) continue;
      int p1 = f.own(1), p2 = f.own(2), q1 = f.other(1);
      const std::string pre = mir ? "mirrored " : "";
      using F = Frame;
      if (p2 >= 3) {
        std::vector<FormFactor> den{f.O(1, 3), f.O(2, 3)};
        add(emit, pre + "cubed chord",
            f.form("first", rule, {{Tag::Z0, 0, 0, 1}, F::L(1, 2, 3)}, den),
            f.form("second", rule, {{Tag::Z1, 0, 0, 1}, F::L(1, 2, 3)}, den));
      } else if (p2 == 2) {
        auto first = f.form("first", rule, {F::L(1, 2, 2)}, {f.O(1, 2), f.O(2, 2)});
        if (l0 >= 3)
          add(emit, pre + "double pair", first,
              f.form("second", rule, {F::L(1, 2, 2), F::L(1, 3)}, {f.O(1, 2), f.O(2, 2), f.O(3)}));
        else if (p1 >= 3)
          add(emit, pre + "double pair", first, f.form("second", rule, {F::L(1, 2, 3)}, {f.O(1, 3), f.O(2, 2)}));
      } else if (p2 == 1) {
        if (l0 == 2) {
          add(emit, pre + "two pairs, simple second",
              f.form("first", rule, {F::L(1, 2)}, {f.O(1, 2), f.O(2)}),
              f.form("second", rule, {F::L(1, 2, 2)}, {f.O(1, 3), f.O(2)}));
        } else if (l0 == 3) {
          auto first = f.form("first", rule, {F::L(1, 2), F::L(1, 3)}, {f.O(1, 2), f.O(2), f.O(3)});
          if (p1 == 2 && q1 == 1)
            add(emit, pre + "three pairs", first,
                f.form("second", rule, {F::L(1, 2), F::L(2, 3)}, {f.O(1, 2), f.O(2), f.O(3)}));
          else if (p1 >= 3)
            add(emit, pre + "three pairs", first,
                f.form("second", rule, {F::L(1, 2), F::L(1, 3, 2)}, {f.O(1, 3), f.O(2), f.O(3)}));
        } else {
          std::vector<FormFactor> den{f.O(1), f.O(2), f.O(3), f.O(4)};
          add(emit, pre + "two chords", f.form("first", rule, {F::L(1, 2), F::L(3, 4)}, den),
              f.form("second", rule, {F::L(1, 3), F::L(2, 4)}, den));
        }
      }
    }
  }
}

}  // namespace

WitnessPair emit_witnesses(const Verdict& v, const Analysis& an) {
  if (v.outcome != Outcome::Hyperbolic) throw std::invalid_argument("no witness for low-genus verdicts");
  std::vector<Candidate> cands;
  Emit emit = [&](Candidate c) { cands.push_back(std::move(c)); };
  const std::string& r = v.rule;
  if (r == rules::kEqualDegreeGap)
    infinity_forms(an, r, emit);
  else if (r == rules::kAlphaMass)
    mass_sum(an, false, r, emit);
  else if (r == rules::kBetaMass)
    mass_sum(an, true, r, emit);
  else if (r == rules::kAlphaBig2a || r == rules::kAlphaBig2b || r == rules::kAlphaBig2c)
    lemma(an, false, r[5], r, emit);
  else if (r == rules::kBetaBig2a || r == rules::kBetaBig2b || r == rules::kBetaBig2c)
    lemma(an, true, r[6], r, emit);
  else if (r == rules::kCaseAnalysis)
    case_analysis(an, r, emit);
  else
    throw std::invalid_argument("no witness construction for rule " + r);
  if (cands.empty()) throw std::logic_error("no witness construction applies for rule " + r);

  for (auto& c : cands) {
    auto r1 = check_regularity(c.first, an.pm);
    auto r2 = check_regularity(c.second, an.pm);
    if (r1.overall && r2.overall)
      return {std::move(c.first), std::move(c.second), c.proof_case, std::move(r1), std::move(r2), true};
  }
  auto& c = cands.front();
  auto r1 = check_regularity(c.first, an.pm);
  auto r2 = check_regularity(c.second, an.pm);
  return {std::move(c.first), std::move(c.second), c.proof_case, std::move(r1), std::move(r2), true};
}

}  // namespace sepvar
