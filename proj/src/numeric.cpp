#include "sepvar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sepvar {

namespace {

using Prec = mpfr_prec_t;

struct RealPoly {
  std::vector<BigFloat> c;     // rounded coefficients
  std::vector<BigFloat> absc;  // |c_k|
  Prec prec;

  RealPoly(const Poly& p, Prec prec) : prec(prec) {
    for (int k = 0; k <= p.degree(); ++k) {
      c.emplace_back(p.coeff(k), prec);
      absc.push_back(abs(c.back()));
    }
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

BigFloat unit(Prec prec) { return BigFloat::pow2(-static_cast<long>(prec), prec); }

// Horner for p(z), p'(z) at complex z.
void horner(const RealPoly& p, const BigComplex& z, BigComplex& v, BigComplex& dv) {
  const Prec prec = p.prec;
  v = BigComplex(prec);
  dv = BigComplex(prec);
  for (int k = p.degree(); k >= 0; --k) {
    dv = dv * z + v;
    v = v * z;
    v.re = v.re + p.c[k];
  }
}

// Sum |c_k| r^k.
BigFloat abs_eval(const std::vector<BigFloat>& absc, const BigFloat& r) {
  BigFloat s(r.precision());
  for (int k = static_cast<int>(absc.size()) - 1; k >= 0; --k) s = s * r + absc[k];
  return s;
}

// Bound on |computed p(z) - p(z)| for Horner in complex arithmetic, including
// rounding of the coefficients.
BigFloat horner_error(const RealPoly& p, const BigFloat& modz) {
  BigFloat gamma = BigFloat(static_cast<double>(8 * p.degree() + 8), p.prec) * unit(p.prec);
  return gamma * abs_eval(p.absc, modz);
}

BigFloat root_bound(const RealPoly& p) {
  // Fujiwara: 2 max |c_{d-k}/c_d|^{1/k}.
  const int d = p.degree();
  double best = 0;
  for (int k = 1; k <= d; ++k) {
    BigFloat ratio = p.absc[d - k] / p.absc[d];
    if (ratio.is_zero()) continue;
    double lg = static_cast<double>(ratio.exponent2() + 1) / k;
    best = std::max(best, lg);
  }
  return BigFloat(2.0 * std::exp2(best), p.prec);
}

}  // namespace

std::vector<ComplexApprox> complex_roots(const Poly& p, int precision_bits) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots: constant polynomial");
  if (!is_squarefree(p)) throw std::invalid_argument("complex_roots: input must be squarefree");
  const Prec prec = precision_bits;
  RealPoly rp(p, prec);
  const int d = rp.degree();

  std::vector<BigComplex> z;
  {
    BigFloat shift = -(rp.c[d - 1] / (BigFloat(static_cast<double>(d), prec) * rp.c[d]));
    BigFloat r = root_bound(rp);
    for (int k = 0; k < d; ++k) {
      double ang = 2 * std::numbers::pi * k / d + 0.7;
      z.emplace_back(shift + r * BigFloat(std::cos(ang), prec), r * BigFloat(std::sin(ang), prec));
    }
  }

  const BigFloat one(1.0, prec);
  const BigFloat stop = BigFloat::pow2(-static_cast<long>(prec) + 12, prec);
  BigComplex v(prec), dv(prec);
  for (int iter = 0; iter < 100 + 20 * d; ++iter) {
    bool done = true;
    for (int k = 0; k < d; ++k) {
      horner(rp, z[k], v, dv);
      if (v.re.is_zero() && v.im.is_zero()) continue;
      BigComplex ratio = v / dv;
      BigComplex sum(prec);
      for (int j = 0; j < d; ++j)
        if (j != k) sum = sum + BigComplex(one, BigFloat(prec)) / (z[k] - z[j]);
      BigComplex w = ratio / (BigComplex(one, BigFloat(prec)) - ratio * sum);
      z[k] = z[k] - w;
      if (stop * (one + z[k].abs()) < w.abs()) done = false;
    }
    if (done) break;
  }

  // Inclusion radii d |p(z_k)| / (|c_d| prod |z_k - z_j|), inflated for rounding.
  std::vector<ComplexApprox> out;
  const BigFloat inflate = one + BigFloat(static_cast<double>(16 * d + 16), prec) * unit(prec);
  for (int k = 0; k < d; ++k) {
    horner(rp, z[k], v, dv);
    BigFloat modz = z[k].abs();
    BigFloat num = v.abs() + horner_error(rp, modz);
    BigFloat den = abs(rp.c[d]);
    for (int j = 0; j < d; ++j)
      if (j != k) den = den * (z[k] - z[j]).abs();
    BigFloat rad(prec);
    if (den.is_zero()) {
      rad = BigFloat(1e300, prec);
    } else {
      rad = BigFloat(static_cast<double>(d), prec) * num / den * inflate * inflate;
    }
    rad = rad + unit(prec) * (one + modz);
    out.push_back({z[k].re, z[k].im, rad});
  }
  return out;
}

bool disks_disjoint(const ComplexApprox& a, const ComplexApprox& b) {
  BigFloat dist = (a.center() - b.center()).abs();
  return a.radius + b.radius < dist;
}

namespace {

bool tiny(const ComplexApprox& a, Prec prec) {
  BigFloat scale = BigFloat::pow2(-static_cast<long>(prec / 2), prec);
  BigFloat mod = a.center().abs();
  return a.radius < scale * (BigFloat(1.0, prec) + mod);
}

enum class Relation { Separate, Coincide, Unclear };

Relation relate(const ComplexApprox& a, const ComplexApprox& b, Prec prec) {
  if (disks_disjoint(a, b)) return Relation::Separate;
  return tiny(a, prec) && tiny(b, prec) ? Relation::Coincide : Relation::Unclear;
}

struct ValueDisk {
  ComplexApprox disk;
  int multiplicity = 0;
};

// P(root) for every root of every multiplicity class of P'.
std::vector<ValueDisk> critical_values(const Poly& p, Prec prec) {
  RealPoly rp(p, prec);
  Poly dp = derivative(p);
  RealPoly rdp(dp, prec);
  std::vector<ValueDisk> out;
  for (const auto& cls : analyze(p).classes) {
    for (auto& root : complex_roots(cls.roots, static_cast<int>(prec))) {
      BigComplex z = root.center();
      BigComplex v(prec), dv(prec);
      horner(rp, z, v, dv);
      BigFloat modz = z.abs();
      BigFloat slope = abs_eval(rdp.absc, modz + root.radius);
      BigFloat rad = root.radius * slope + horner_error(rp, modz);
      rad = rad + unit(prec) * (BigFloat(1.0, prec) + v.abs());
      out.push_back({{v.re, v.im, rad}, cls.multiplicity});
    }
  }
  return out;
}

struct Tally {
  bool ambiguous = false;
  bool hyp_p = true;
  bool hyp_q = true;
  std::map<std::pair<int, int>, int> pairs;
};

bool pairwise_separate(const std::vector<ValueDisk>& vs, Prec prec, bool& ambiguous) {
  bool separate = true;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Relation r = relate(vs[i].disk, vs[j].disk, prec);
      if (r == Relation::Unclear) ambiguous = true;
      if (r == Relation::Coincide) separate = false;
    }
  return separate;
}

}  // namespace

ClusterReport cluster_disks(const std::vector<ComplexApprox>& disks, int precision_bits) {
  const Prec prec = precision_bits;
  const std::size_t n = disks.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  ClusterReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Relation r = relate(disks[i], disks[j], prec);
      if (r == Relation::Unclear) rep.ambiguous = true;
      if (r == Relation::Coincide) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    auto [it, fresh] = slot.emplace(root, rep.clusters.size());
    if (fresh) rep.clusters.push_back({disks[i], 0});
    ++rep.clusters[it->second].count;
  }
  return rep;
}

const char* numeric_outcome_name(NumericOutcome o) {
  switch (o) {
    case NumericOutcome::Agree:
      return "agree";
    case NumericOutcome::Disagree:
      return "disagree";
    case NumericOutcome::Ambiguous:
      return "ambiguous";
  }
  return "?";
}

NumericCheck verify_pair_counts(const PolynomialPair& pp, const PairMatching& pm, int precision_bits, int cap) {
  const bool sym_hyp_p = hypothesis_I(pp.p);
  const bool sym_hyp_q = hypothesis_I(pp.q);
  NumericCheck out;
  for (int bits = precision_bits;; bits *= 2) {
    const Prec prec = bits;
    auto vp = critical_values(pp.p, prec);
    auto vq = critical_values(pp.q, prec);
    bool ambiguous = false;
    out = NumericCheck{};
    out.precision_bits = bits;
    out.hyp_p = pairwise_separate(vp, prec, ambiguous);
    out.hyp_q = pairwise_separate(vq, prec, ambiguous);
    std::map<std::pair<int, int>, int> pairs;
    for (const auto& a : vp)
      for (const auto& b : vq) {
        Relation r = relate(a.disk, b.disk, prec);
        if (r == Relation::Unclear) ambiguous = true;
        if (r == Relation::Coincide) ++pairs[{a.multiplicity, b.multiplicity}];
      }
    for (const auto& [k, c] : pairs) {
      out.pair_classes.push_back({k.first, k.second, c});
      out.l0 += c;
    }
    std::vector<ComplexApprox> all;
    for (const auto& v : vp) all.push_back(v.disk);
    for (const auto& v : vq) all.push_back(v.disk);
    out.values = cluster_disks(all, bits);

    if (!ambiguous) {
      bool agree = out.hyp_p == sym_hyp_p && out.hyp_q == sym_hyp_q && out.pair_classes == pm.pair_classes &&
                   out.l0 == pm.l0;
      out.outcome = agree ? NumericOutcome::Agree : NumericOutcome::Disagree;
      if (!agree) out.detail = "numeric pair classes or Hypothesis I differ from the exact computation";
      return out;
    }
    if (bits * 2 > cap) {
      out.outcome = NumericOutcome::Ambiguous;
      out.detail = "overlapping value disks at " + std::to_string(bits) + " bits";
      return out;
    }
  }
}

NumericCheck verify_pair_counts(const Analysis& a, int precision_bits, int cap) {
  return verify_pair_counts(a.pair, a.pm, precision_bits, cap);
}

std::optional<bool> numeric_hypothesis_I(const Poly& p, int precision_bits, int cap) {
  for (int bits = precision_bits; bits <= cap; bits *= 2) {
    bool ambiguous = false;
    bool sep = pairwise_separate(critical_values(p, bits), bits, ambiguous);
    if (!ambiguous) return sep;
  }
  return std::nullopt;
}

ProductCheck check_product_formula(const Poly& S, const Poly& P, const std::vector<Rational>& ys,
                                   int precision_bits) {
  const Prec prec = precision_bits;
  Poly R = resultant_shift(S, P);
  RealPoly rp(P, prec);
  RealPoly rdp(derivative(P), prec);
  std::vector<ComplexApprox> values;
  for (auto& root : complex_roots(S, precision_bits)) {
    BigComplex z = root.center();
    BigComplex v(prec), dv(prec);
    horner(rp, z, v, dv);
    BigFloat modz = z.abs();
    BigFloat rad = root.radius * abs_eval(rdp.absc, modz + root.radius) + horner_error(rp, modz);
    values.push_back({v.re, v.im, rad});
  }
  ProductCheck out;
  out.within = true;
  const BigFloat one(1.0, prec);
  const int d = static_cast<int>(values.size());
  const BigFloat gamma = BigFloat(static_cast<double>(8 * d + 8), prec) * unit(prec);
  for (const auto& y : ys) {
    BigComplex prod(one, BigFloat(prec));
    BigFloat upper = one;  // prod (|y - v| + rad)
    BigFloat lower = one;  // prod |y - v|
    for (const auto& v : values) {
      BigComplex diff = BigComplex(BigFloat(y, prec), BigFloat(prec)) - v.center();
      prod = prod * diff;
      BigFloat m = diff.abs();
      upper = upper * (m + v.radius);
      lower = lower * m;
    }
    BigFloat exact(R.eval(y), prec);
    BigFloat err = (BigComplex(exact, BigFloat(prec)) - prod).abs();
    BigFloat bound = (upper - lower) + gamma * upper + unit(prec) * (one + abs(exact));
    double ratio = (err / bound).to_double();
    out.worst_ratio = std::max(out.worst_ratio, ratio);
    if (bound < err) out.within = false;
  }
  return out;
}

}  // namespace sepvar
