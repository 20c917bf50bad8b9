#include "posbasis/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "posbasis/errors.hpp"

namespace posbasis {

namespace {
void strip(std::vector<Rational>& c) {
  while (!c.empty() && c.back().sign() == 0) c.pop_back();
}
}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw IndexOutOfRangeError("negative power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

int Polynomial::degree() const {
  if (is_zero()) throw ZeroPolynomialError();
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw ZeroPolynomialError();
  return coeffs_.back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return Polynomial(std::move(v));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.sign() == 0) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    if (k == 0 || !(a == Rational(1))) os << a.str();
    if (k > 0) {
      if (!(a == Rational(1))) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroPolynomialError();
  if (a.is_zero() || a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  const Rational& lb = b.leading();
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db));
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lb;
    if (q.sign() != 0) {
      quot[static_cast<std::size_t>(k - db)] = q;
      for (int i = 0; i <= db; ++i)
        rem[static_cast<std::size_t>(k - db + i)] -= q * b.coeff(i);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() == 0) return p;
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return divmod(p, g).first;
}

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  mpz_class den_lcm(1);
  for (const Rational& c : p.coeffs()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    den_lcm = l;
  }
  mpz_class content(0);
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    mpz_class v = c.num() * (den_lcm / c.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const mpz_class& v : ints) out.emplace_back(mpz_class(v / content));
  return Polynomial(std::move(out));
}

FactoredPoly::FactoredPoly(int sign, std::vector<std::pair<Rational, int>> factors)
    : sign_(sign), factors_(std::move(factors)) {
  if (sign_ != 1 && sign_ != -1) throw DomainError("factored sign must be +1 or -1");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].second < 1) throw DomainError("factor multiplicity must be positive");
    if (i > 0 && !(factors_[i - 1].first < factors_[i].first))
      throw DomainError("factored roots must be strictly increasing");
  }
}

FactoredPoly FactoredPoly::make(int sign, std::vector<std::pair<Rational, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rational, int>> merged;
  for (auto& f : factors) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(std::move(f));
  }
  return FactoredPoly(sign, std::move(merged));
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Polynomial FactoredPoly::expand() const {
  Polynomial p = Polynomial::constant(Rational(sign_));
  for (const auto& [root, mult] : factors_) {
    Polynomial lin(std::vector<Rational>{-root, Rational(1)});
    for (int i = 0; i < mult; ++i) p = p * lin;
  }
  return p;
}

Rational FactoredPoly::eval(const Rational& x) const {
  Rational acc(sign_);
  for (const auto& [root, mult] : factors_) {
    Rational d = x - root;
    for (int i = 0; i < mult; ++i) acc *= d;
  }
  return acc;
}

int FactoredPoly::sign_at(const Rational& x) const {
  int s = sign_;
  for (const auto& [root, mult] : factors_) {
    int ds = (x - root).sign();
    if (ds == 0) return 0;
    if (ds < 0 && (mult & 1)) s = -s;
  }
  return s;
}

FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
  std::vector<std::pair<Rational, int>> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return FactoredPoly::make(a.sign_ * b.sign_, std::move(all));
}

}  // namespace posbasis
