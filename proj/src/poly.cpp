#include "sepvar/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sepvar {

namespace {

const Rational kZero(0);

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

const Rational& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * t + coeffs_[k];
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.leading();
  auto bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational t = r[k] * inv;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  Poly u = a.monic(), v = b.monic();
  while (!v.is_zero()) {
    Poly r = (u % v).monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v[k - 1] = p.coeff(k) * k;
  return Poly(std::move(v));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + Poly::constant(p.coeff(k));
  return acc;
}

Poly power(const Poly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly acc = Poly::constant(1), base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Poly MultiplicityDecomposition::expand() const {
  Poly acc = Poly::constant(content);
  for (const auto& part : parts) acc = acc * power(part.factor, part.multiplicity);
  return acc;
}

MultiplicityDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  MultiplicityDecomposition out;
  out.content = p.leading();
  if (p.degree() == 0) return out;

  // Yun.
  Poly f = p.monic();
  Poly df = derivative(f);
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    Poly g = gcd(b, d);
    b = b / g;
    c = d / g;
    d = c - derivative(b);
    if (g.degree() > 0) out.parts.push_back({g, i});
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of zero");
  if (p.degree() == 0) return Poly::constant(1);
  return p.monic() / gcd(p, derivative(p));
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).degree() == 0;
}

Rational resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  Poly a = a0, b = b0;
  Rational acc = 1;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational t = 1;
      for (int i = 0; i < m; ++i) t *= b.leading();
      return acc * t;
    }
    Poly r = a % b;
    if (r.is_zero()) return 0;
    int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

Rational resultant_sylvester(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = a.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = b.coeff(n - j);

  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (int j = col; j < size; ++j) M[r][j] -= f * M[col][j];
    }
  }
  return det;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation size");
  std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Newton form to monomial basis by Horner.
  Poly acc = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    acc = acc * Poly{-xs[i], 1} + Poly::constant(dd[i]);
  return acc;
}

namespace {

void check_shift_args(const Poly& S, const Poly& P) {
  if (S.degree() < 1) throw std::domain_error("resultant_shift needs nonconstant S");
  if (S.leading() != 1) throw std::domain_error("resultant_shift needs monic S");
  if (P.degree() < 1) throw std::domain_error("resultant_shift needs nonconstant P");
}

template <class Res>
Poly shift_by_interpolation(const Poly& S, const Poly& P, Res res) {
  check_shift_args(S, P);
  // R has degree deg S, so deg S + 1 nodes determine it.
  int count = S.degree() + 1;
  std::vector<Rational> xs, ys;
  for (int k = 0; k < count; ++k) {
    Rational y = k;
    xs.push_back(y);
    ys.push_back(res(S, Poly::constant(y) - P));
  }
  return interpolate(xs, ys);
}

}  // namespace

Poly resultant_shift(const Poly& S, const Poly& P) {
  // Res(S, y - P) = lc(S)^deg P * prod (y - P(a)); S monic.
  Poly r = shift_by_interpolation(S, P, [](const Poly& a, const Poly& b) { return resultant(a, b); });
#ifndef NDEBUG
  assert(r == resultant_shift_sylvester(S, P));
#endif
  return r;
}

Poly resultant_shift_sylvester(const Poly& S, const Poly& P) {
  return shift_by_interpolation(S, P,
                                [](const Poly& a, const Poly& b) { return resultant_sylvester(a, b); });
}

}  // namespace sepvar
