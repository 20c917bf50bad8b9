#ifndef POSBASIS_POLYNOMIAL_HPP
#define POSBASIS_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "posbasis/rational.hpp"

namespace posbasis {

// Dense univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial is the empty coefficient list; it has no degree
// and operations that need one throw ZeroPolynomialError.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  // c * x^power
  static Polynomial monomial(const Rational& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;
  // Coefficient of x^k; zero beyond the stored range.
  Rational coeff(int k) const;

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  std::vector<Rational> coeffs_;
};

// Quotient and remainder of a by b over the rationals; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// p with all repeated roots reduced to simple ones: p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

// Scale to integer coefficients with content 1 and positive leading
// coefficient. Roots are unchanged.
Polynomial primitive_integer(const Polynomial& p);

// Signed product of linear factors: sign * prod (x - root)^mult with roots
// strictly increasing. The paper-side extremal polynomials all live here.
class FactoredPoly {
 public:
  FactoredPoly() : sign_(1) {}  // empty product = constant 1
  FactoredPoly(int sign, std::vector<std::pair<Rational, int>> factors);

  // Sorts and merges repeated roots; multiplicities must be positive.
  static FactoredPoly make(int sign, std::vector<std::pair<Rational, int>> factors);

  int sign() const { return sign_; }
  void flip_sign() { sign_ = -sign_; }
  const std::vector<std::pair<Rational, int>>& factors() const { return factors_; }
  int degree() const;

  Polynomial expand() const;
  Rational eval(const Rational& x) const;
  // Sign of the value at x without expanding.
  int sign_at(const Rational& x) const;

  // Concatenated factor lists, multiplied signs.
  friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b);

 private:
  int sign_;
  std::vector<std::pair<Rational, int>> factors_;
};

}  // namespace posbasis

#endif
