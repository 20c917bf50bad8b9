#include "posbasis/verify.hpp"

#include "posbasis/errors.hpp"
#include "posbasis/linalg.hpp"

namespace posbasis {

namespace {

// Roots of g inside omega, leftmost first; g nonconstant.
std::optional<RootLoc> leftmost_root_in(const Polynomial& g, const CompactSet& omega) {
  for (const Interval& piece : omega.pieces()) {
    if (piece.is_point()) {
      if (g.eval(piece.lo).sign() == 0) return RootLoc::at(piece.lo);
      continue;
    }
    std::vector<RootLoc> roots = isolate_roots(g, piece.lo, piece.hi);
    if (!roots.empty()) return roots.front();
  }
  return std::nullopt;
}

// A point of omega where p does not vanish; exists unless p vanishes on all
// of omega. Deterministic scan: piece points, endpoints, then an equally
// spaced interior sweep (deg p + 1 candidates beat deg p roots).
std::optional<Rational> point_avoiding_roots(const Polynomial& p, const CompactSet& omega) {
  int d = p.is_zero() ? 0 : p.degree();
  for (const Interval& piece : omega.pieces()) {
    if (piece.is_point()) {
      if (p.eval(piece.lo).sign() != 0) return piece.lo;
      continue;
    }
    if (p.eval(piece.lo).sign() != 0) return piece.lo;
    if (p.eval(piece.hi).sign() != 0) return piece.hi;
    for (int i = 1; i <= d + 1; ++i) {
      Rational x = piece.lo + Rational(i) * (piece.hi - piece.lo) / Rational(d + 2);
      if (p.eval(x).sign() != 0) return x;
    }
  }
  return std::nullopt;
}

// Strip from g every root it shares with p, with full multiplicity.
Polynomial remove_common_roots(Polynomial g, const Polynomial& p) {
  for (;;) {
    Polynomial d = poly_gcd(g, p);
    if (d.is_zero() || d.degree() == 0) return g;
    g = divmod(g, d).first;
  }
}

}  // namespace

VerifyReport verify_positive_basis(const CompactSet& omega,
                                   const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw DomainError("empty family");
  for (const Polynomial& p : polys)
    if (p.is_zero()) throw ZeroPolynomialError();

  std::size_t n = polys.size();
  VerifyReport rep;
  rep.polys.resize(n);

  bool all_nonneg = true;
  for (std::size_t k = 0; k < n; ++k) {
    rep.polys[k].negativity_witness = negativity_witness(polys[k], omega);
    rep.polys[k].nonneg = !rep.polys[k].negativity_witness.has_value();
    all_nonneg = all_nonneg && rep.polys[k].nonneg;
  }

  bool all_nodes = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (n == 1) {
      auto pt = point_avoiding_roots(polys[0], omega);
      if (pt) rep.polys[k].node = RootLoc::at(*pt);
      all_nodes = all_nodes && pt.has_value();
      continue;
    }
    // common roots of the other members, minus anything shared with member k
    Polynomial g;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) g = g.is_zero() ? polys[i] : poly_gcd(g, polys[i]);
    if (!g.is_zero() && g.degree() >= 1) g = remove_common_roots(std::move(g), polys[k]);
    if (g.is_zero() || g.degree() == 0) {
      all_nodes = false;
      continue;
    }
    rep.polys[k].node = leftmost_root_in(g, omega);
    all_nodes = all_nodes && rep.polys[k].node.has_value();
  }

  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (const Polynomial& p : polys) rows.push_back(p.coeffs());
  rep.independent = matrix_rank(std::move(rows)) == static_cast<int>(n);

  if (!all_nonneg)
    rep.reason = VerifyReason::NOT_NONNEGATIVE;
  else if (!all_nodes)
    rep.reason = VerifyReason::NO_EXACT_NODE;
  else if (!rep.independent)
    rep.reason = VerifyReason::NOT_INDEPENDENT;
  else
    rep.reason = VerifyReason::OK;
  rep.accept = rep.reason == VerifyReason::OK;
  return rep;
}

const char* to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::OK: return "OK";
    case VerifyReason::NOT_NONNEGATIVE: return "NOT_NONNEGATIVE";
    case VerifyReason::NO_EXACT_NODE: return "NO_EXACT_NODE";
    case VerifyReason::NOT_INDEPENDENT: return "NOT_INDEPENDENT";
  }
  return "?";
}

}  // namespace posbasis
