#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace sepvar {

// GMP keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;

std::string to_string(const Rational& r);

// Dense univariate polynomial over Q. coeffs_[k] is the coefficient of x^k;
// the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int k);
  static Poly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational coeff(int k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Poly monic() const;
  Rational eval(const Rational& t) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Human form with the given variable, e.g. "x^3 - 3*x + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact division, throws otherwise
Poly operator%(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Poly compose(const Poly& p, const Poly& q);
Poly power(const Poly& p, int e);

struct MultiplicityPart {
  Poly factor;
  int multiplicity;
};

struct MultiplicityDecomposition {
  std::vector<MultiplicityPart> parts;
  Rational content;
  Poly expand() const;
};

MultiplicityDecomposition squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

// Res_x(a, b) by the Euclidean recursion.
Rational resultant(const Poly& a, const Poly& b);
// Same value as det(Sylvester(a, b)) by Gaussian elimination.
Rational resultant_sylvester(const Poly& a, const Poly& b);

// R(y) = Res_x(S(x), y - P(x)) = prod_{S(a)=0} (y - P(a)) for monic S.
Poly resultant_shift(const Poly& S, const Poly& P);
Poly resultant_shift_sylvester(const Poly& S, const Poly& P);

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace sepvar
