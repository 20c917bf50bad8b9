#include "posbasis/sign_analysis.hpp"

#include <algorithm>
#include <cassert>

#include "posbasis/errors.hpp"

namespace posbasis {

Rational simplest_in_open(const Rational& lo, const Rational& hi) {
  assert(lo < hi);
  mpz_class f = lo.floor();
  Rational next_int(mpz_class(f + 1));
  if (lo < next_int && next_int < hi) return next_int;
  Rational a = lo - Rational(f), b = hi - Rational(f);  // 0 <= a < b <= 1
  if (a.sign() == 0) {
    mpz_class k = (Rational(1) / b).floor() + 1;
    return Rational(f) + Rational(mpz_class(1), k);
  }
  return Rational(f) + Rational(1) / simplest_in_open(Rational(1) / b, Rational(1) / a);
}

namespace {

// Sturm chain via plain exact remainders, no coefficient normalization.
std::vector<Polynomial> sturm_chain(const Polynomial& q) {
  std::vector<Polynomial> chain{q};
  Polynomial d = q.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  for (;;) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const Polynomial& f : chain) {
    int s = f.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

// Number of roots of the (squarefree) chain head strictly inside (a, b);
// requires q(a) != 0 and q(b) != 0.
int count_open(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Exact division of q by (x - r); r must be a root.
Polynomial deflate(const Polynomial& q, const Rational& r) {
  Polynomial lin(std::vector<Rational>{-r, Rational(1)});
  auto [quot, rem] = divmod(q, lin);
  assert(rem.is_zero());
  return quot;
}

struct Isolator {
  Polynomial q;  // primitive integer, squarefree, nonzero at all cut points
  std::vector<Polynomial> chain;
  mpz_class den_bound;  // rational roots have denominator dividing lc(q)

  explicit Isolator(Polynomial squarefree_primitive) : q(std::move(squarefree_primitive)) {
    chain = sturm_chain(q);
    den_bound = abs(q.leading().num());
  }

  // Pin the single root inside (a, b) to an exact rational or to a tight open
  // interval whose endpoints are interior to the original (a, b).
  RootLoc resolve_single(Rational a, Rational b) const {
    int sa = q.eval(a).sign();
    // Move both endpoints strictly inside so callers may evaluate p there.
    for (Rational step = (b - a) / 2;; step /= 2) {
      Rational m = a + step;
      int s = q.eval(m).sign();
      if (s == 0) return RootLoc::at(m);
      if (s == sa) {
        a = m;
        break;
      }
      b = m;
    }
    for (Rational step = (b - a) / 2;; step /= 2) {
      Rational m = b - step;
      int s = q.eval(m).sign();
      if (s == 0) return RootLoc::at(m);
      if (s != sa) {
        b = m;
        break;
      }
      a = m;
    }
    // Shrink until at most one rational with denominator <= den_bound fits.
    Rational width_target = Rational(1) / Rational(den_bound * den_bound);
    while (!(b - a < width_target)) {
      Rational m = (a + b) / 2;
      int s = q.eval(m).sign();
      if (s == 0) return RootLoc::at(m);
      if (s == sa)
        a = m;
      else
        b = m;
    }
    Rational cand = simplest_in_open(a, b);
    if (!(Rational(den_bound) < Rational(cand.den())) && q.eval(cand).sign() == 0)
      return RootLoc::at(cand);
    return RootLoc::in(a, b);
  }

  // Isolate all roots in (a, b); q(a), q(b) != 0. Returns false when a new
  // exact root was discovered at a bisection point (reported via new_root).
  bool isolate_open(const Rational& a, const Rational& b, std::vector<RootLoc>& out,
                    std::optional<Rational>& new_root) const {
    int c = count_open(chain, a, b);
    if (c == 0) return true;
    if (c == 1) {
      out.push_back(resolve_single(a, b));
      return true;
    }
    Rational m = (a + b) / 2;
    if (q.eval(m).sign() == 0) {
      new_root = m;
      return false;
    }
    return isolate_open(a, m, out, new_root) && isolate_open(m, b, out, new_root);
  }
};

}  // namespace

std::vector<RootLoc> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (hi < lo) throw BadIntervalError("root isolation with lo > hi");

  Polynomial q = primitive_integer(squarefree_part(p));
  std::vector<Rational> exact;
  if (q.eval(lo).sign() == 0) {
    exact.push_back(lo);
    q = deflate(q, lo);
  }
  if (lo < hi && q.eval(hi).sign() == 0) {
    exact.push_back(hi);
    q = deflate(q, hi);
  }

  std::vector<RootLoc> intervals;
  if (lo < hi && !q.is_zero() && q.degree() > 0) {
    for (;;) {
      q = primitive_integer(q);
      Isolator iso(q);
      intervals.clear();
      std::vector<Rational> cuts{lo};
      for (const Rational& r : exact)
        if (lo < r && r < hi) cuts.push_back(r);
      cuts.push_back(hi);
      std::sort(cuts.begin(), cuts.end());
      std::optional<Rational> new_root;
      bool done = true;
      for (std::size_t i = 0; i + 1 < cuts.size() && done; ++i)
        done = iso.isolate_open(cuts[i], cuts[i + 1], intervals, new_root);
      if (done) break;
      exact.push_back(*new_root);
      q = deflate(q, *new_root);
      if (q.degree() == 0) {
        intervals.clear();
        break;
      }
    }
  }

  std::vector<RootLoc> roots;
  roots.reserve(exact.size() + intervals.size());
  for (Rational& r : exact) roots.push_back(RootLoc::at(std::move(r)));
  for (RootLoc& r : intervals) roots.push_back(std::move(r));
  std::sort(roots.begin(), roots.end(),
            [](const RootLoc& a, const RootLoc& b) { return a.key() < b.key(); });
  return roots;
}

namespace {

// Sign analysis shared by the public report and the witness search. Evaluates
// p at the interval ends, at every isolating-interval endpoint, and at a
// midpoint of every root-free gap between consecutive root locations; p has
// constant sign between consecutive roots, so these samples decide
// nonnegativity. Records a strictly negative rational sample when found.
struct Analysis {
  SignReport report;
  std::optional<Rational> negative_at;
};

Analysis analyze(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Analysis a;
  a.report.roots = isolate_roots(p, lo, hi);
  auto consider = [&](const Rational& x) {
    int s = p.eval(x).sign();
    if (s < 0 && !a.negative_at) a.negative_at = x;
    return s;
  };
  if (lo == hi) {
    int s = consider(lo);
    a.report.nonneg = s >= 0;
    a.report.strict = s > 0;
    return a;
  }
  bool all_nonneg = consider(lo) >= 0 && consider(hi) >= 0;
  std::vector<Rational> bounds{lo};
  for (const RootLoc& r : a.report.roots) {
    if (r.exact) {
      bounds.push_back(r.value);
    } else {
      all_nonneg = consider(r.lo) >= 0 && all_nonneg;
      all_nonneg = consider(r.hi) >= 0 && all_nonneg;
      bounds.push_back(r.lo);
      bounds.push_back(r.hi);
    }
  }
  bounds.push_back(hi);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    if (!(bounds[i] < bounds[i + 1])) continue;
    all_nonneg = consider((bounds[i] + bounds[i + 1]) / 2) >= 0 && all_nonneg;
  }
  a.report.nonneg = all_nonneg;
  a.report.strict = all_nonneg && a.report.roots.empty();
  return a;
}

}  // namespace

SignReport sturm_sign_report(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (hi < lo) throw BadIntervalError("sign report with lo > hi");
  return analyze(p, lo, hi).report;
}

bool is_nonneg_on(const Polynomial& p, const CompactSet& omega) {
  return !negativity_witness(p, omega).has_value();
}

std::optional<Rational> negativity_witness(const Polynomial& p, const CompactSet& omega) {
  if (p.is_zero()) throw ZeroPolynomialError();
  for (const Interval& piece : omega.pieces()) {
    if (piece.is_point()) {
      if (p.eval(piece.lo).sign() < 0) return piece.lo;
      continue;
    }
    Analysis a = analyze(p, piece.lo, piece.hi);
    if (a.negative_at) return a.negative_at;
  }
  return std::nullopt;
}

}  // namespace posbasis
