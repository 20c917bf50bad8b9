#include "posbasis/schur_cohn.hpp"

#include "posbasis/errors.hpp"

namespace posbasis {

namespace {

Polynomial reversed(const Polynomial& p) {
  std::vector<Rational> v(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial(std::move(v));
}

Polynomial shift_down(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> v(p.coeffs().begin() + 1, p.coeffs().end());
  return Polynomial(std::move(v));
}

// All roots strictly inside the open unit disk. One Schur transform step per
// degree: f passes iff c0^2 < cd^2 and (cd*f - c0*f~)/z passes, where f~ has
// the coefficients of f reversed. Boundary roots persist through the
// transform, so they force a failure at some level.
bool schur_stable(Polynomial f) {
  for (;;) {
    int d = f.degree();
    if (d == 0) return true;
    Rational c0 = f.coeff(0);
    Rational cd = f.coeff(d);
    if (!(c0 * c0 < cd * cd)) return false;
    f = shift_down(cd * f - c0 * reversed(f));
  }
}

}  // namespace

bool schur_cohn_has_root_in_closed_unit_disk(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() == 0) return false;
  if (p.coeff(0).sign() == 0) return true;  // root at the origin
  // Roots of the reversed polynomial are the reciprocals, so "every root of p
  // outside the closed disk" is "reversed(p) Schur stable".
  return !schur_stable(reversed(p));
}

}  // namespace posbasis
