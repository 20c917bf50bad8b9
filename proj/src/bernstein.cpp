#include "posbasis/bernstein.hpp"

#include <algorithm>

#include "posbasis/errors.hpp"
#include "posbasis/schur_cohn.hpp"
#include "posbasis/sign_analysis.hpp"

namespace posbasis {

namespace {

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace

Polynomial bernstein_basis_poly(int N, int k) {
  if (N < 0 || k < 0 || k > N) throw IndexOutOfRangeError("bernstein index out of range");
  std::vector<std::pair<Rational, int>> fs;
  if (k > 0) fs.emplace_back(Rational(1), k);        // (1-x)^k = (-1)^k (x-1)^k
  if (N - k > 0) fs.emplace_back(Rational(-1), N - k);
  return FactoredPoly::make(k % 2 == 0 ? 1 : -1, std::move(fs)).expand();
}

std::vector<Rational> to_bernstein(const Polynomial& p, int N) {
  if (N < 0) throw IndexOutOfRangeError("negative bernstein degree");
  if (!p.is_zero() && p.degree() > N)
    throw DegreeTooLowError("bernstein degree below polynomial degree");
  // x^j = ((u - v)/2)^j ((u + v)/2)^(N-j) with v = 1-x, u = 1+x, so its
  // coefficient on v^k u^(N-k) is 2^-N sum_i (-1)^i C(j,i) C(N-j,k-i).
  std::vector<Rational> a(static_cast<std::size_t>(N) + 1, Rational(0));
  Rational scale = Rational(mpz_class(1), mpz_class(1) << N);
  for (int j = 0; j < static_cast<int>(p.coeffs().size()); ++j) {
    const Rational& cj = p.coeffs()[static_cast<std::size_t>(j)];
    if (cj.sign() == 0) continue;
    for (int k = 0; k <= N; ++k) {
      mpz_class s(0);
      int ilo = std::max(0, k - (N - j));
      int ihi = std::min(j, k);
      for (int i = ilo; i <= ihi; ++i) {
        mpz_class term = binom(j, i) * binom(N - j, k - i);
        if (i % 2 == 0)
          s += term;
        else
          s -= term;
      }
      if (s != 0) a[static_cast<std::size_t>(k)] += cj * scale * Rational(s);
    }
  }
  return a;
}

Polynomial from_bernstein(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty bernstein coefficient vector");
  int N = static_cast<int>(coeffs.size()) - 1;
  Polynomial p;
  for (int k = 0; k <= N; ++k) {
    if (coeffs[static_cast<std::size_t>(k)].sign() == 0) continue;
    p = p + coeffs[static_cast<std::size_t>(k)] * bernstein_basis_poly(N, k);
  }
  return p;
}

std::vector<Rational> degree_elevate(const std::vector<Rational>& coeffs) {
  std::vector<Rational> out(coeffs.size() + 1, Rational(0));
  Rational half(1, 2);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j < coeffs.size()) out[j] += half * coeffs[j];
    if (j >= 1) out[j] += half * coeffs[j - 1];
  }
  return out;
}

LorentzScan lorentz_degree(const Polynomial& p, int cap) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (cap < 1) throw IndexOutOfRangeError("cap must be positive");
  SignReport rep = sturm_sign_report(p, Rational(-1), Rational(1));
  if (!rep.nonneg)
    throw NotAdmissibleError("polynomial is negative somewhere on [-1,1]");
  for (const RootLoc& r : rep.roots) {
    bool endpoint = r.exact && (r.value == Rational(-1) || r.value == Rational(1));
    if (!endpoint)
      throw NotAdmissibleError("polynomial has a root inside (-1,1)");
  }
  int N = p.degree();
  std::vector<Rational> a = to_bernstein(p, N);
  auto all_nonneg = [](const std::vector<Rational>& v) {
    for (const Rational& x : v)
      if (x.sign() < 0) return false;
    return true;
  };
  while (!all_nonneg(a)) {
    if (N >= cap) return {true, cap};
    a = degree_elevate(a);
    ++N;
  }
  return {false, N};
}

bool lorentz_theorem_applies(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (schur_cohn_has_root_in_closed_unit_disk(p)) return false;
  return sturm_sign_report(p, Rational(-1), Rational(1)).strict;
}

}  // namespace posbasis
