#include "sepvar/linear_factor.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sepvar {

namespace {

// Arithmetic in (Q[z]/f)[x]; an element is a list of residues, index = power of x.
using Residues = std::vector<Poly>;

Residues mul(const Residues& a, const Residues& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Residues r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  for (auto& c : r) c = c % f;
  return r;
}

// Coefficients of P(x) - Q(l*x + mu) reduced modulo f.
Residues difference(const Poly& P, const Poly& Q, const Poly& lambda, const Poly& mu, const Poly& f) {
  Residues u{mu % f, lambda % f};
  Residues acc;
  for (int k = Q.degree(); k >= 0; --k) {
    acc = mul(acc, u, f);
    if (acc.empty()) acc.resize(1);
    acc[0] = acc[0] + Poly::constant(Q.coeff(k));
  }
  Residues out(std::max<std::size_t>(acc.size(), P.degree() + 1));
  for (std::size_t k = 0; k < out.size(); ++k) {
    Poly qk = k < acc.size() ? acc[k] : Poly{};
    out[k] = (Poly::constant(P.coeff(static_cast<int>(k))) - qk) % f;
  }
  return out;
}

// Inverse of a modulo f, if gcd(a, f) = 1.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& f) {
  Poly r0 = f, r1 = a % f;
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return ((1 / r0.leading()) * s0) % f;
}

std::string linear_form(const Rational& cx, const Rational& cy, const Rational& c0) {
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& c, const char* var) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (*var == '\0')
      out << mag.get_str();
    else if (mag == 1)
      out << var;
    else
      out << mag.get_str() << "*" << var;
  };
  term(cx, "x");
  term(cy, "y");
  term(c0, "");
  return first ? "0" : out.str();
}

std::string describe(const Poly& G, const Poly& mu) {
  if (G.degree() == 1) {
    // y = l*x + mu  <=>  x - y/l + mu/l = 0
    Rational l = -G.coeff(0);
    Rational m = mu.coeff(0);
    return linear_form(1, -1 / l, m / l);
  }
  std::ostringstream out;
  out << "x - (y - mu(t))/t over the roots of " << G.to_string("t") << " = 0, mu(t) = "
      << mu.to_string("t");
  return out.str();
}

}  // namespace

std::optional<LinearFactorWitness> find_linear_factor(const PolynomialPair& pp) {
  if (pp.n != pp.m) return std::nullopt;
  int n = pp.n;
  const Rational an = pp.p.coeff(n), bn = pp.q.coeff(n);
  // l^n = a_n / b_n
  Poly f = Poly::monomial(1, n) - Poly::constant(an / bn);
  // Leading-minus-one coefficient fixes mu: with l^(n-1) = a_n / (b_n l),
  // mu = (a_{n-1} b_n l / a_n - b_{n-1}) / (n b_n).
  Poly mu = Rational(1, 1) / (Rational(n) * bn) *
            Poly{-pp.q.coeff(n - 1), pp.p.coeff(n - 1) * bn / an};
  Poly lambda = Poly::x();

  Residues c = difference(pp.p, pp.q, lambda, mu, f);
  assert(c[n].is_zero() && c[n - 1].is_zero());
  Poly G = f;
  for (int k = 0; k <= n - 2 && G.degree() > 0; ++k) G = gcd(G, c[k]);
  if (G.degree() < 1) return std::nullopt;

  LinearFactorWitness w;
  w.lambda_minpoly = G;
  w.mu_numerator = mu % G;
  w.mu_denominator = Poly::constant(1);
  w.description = describe(G, w.mu_numerator);
  return w;
}

bool verify_linear_factor(const PolynomialPair& pp, const LinearFactorWitness& w) {
  const Poly& G = w.lambda_minpoly;
  if (G.degree() < 1 || G.leading() != 1) return false;
  if (pp.n != pp.m) return false;
  // Every root of G must satisfy b_n l^n = a_n.
  Poly f = pp.q.coeff(pp.n) * Poly::monomial(1, pp.n) - Poly::constant(pp.p.coeff(pp.n));
  if (!(f % G).is_zero()) return false;
  auto inv = inverse_mod(w.mu_denominator, G);
  if (!inv) return false;
  Poly mu = (w.mu_numerator * *inv) % G;
  for (const auto& c : difference(pp.p, pp.q, Poly::x(), mu, G))
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace sepvar
