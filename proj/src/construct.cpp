#include "posbasis/construct.hpp"

#include <algorithm>
#include <cassert>

#include "posbasis/errors.hpp"

namespace posbasis {

namespace {

// Reduction from the minimal-degree proof, on raw digit/node vectors so the
// recursion may bottom out at zero nodes. Order: strip end zeros, then inner
// double zeros left to right, then the closed form for an all-ones core with
// isolated interior zeros.
FactoredPoly extremal_impl(std::vector<int> bits, std::vector<Rational> nodes) {
  int sign = 1;
  std::vector<std::pair<Rational, int>> factors;

  for (;;) {
    if (nodes.empty()) break;
    if (bits.front() == 0) {
      // divide the problem by (x - t_1); positive at every remaining witness
      factors.emplace_back(nodes.front(), 1);
      bits.erase(bits.begin());
      nodes.erase(nodes.begin());
      continue;
    }
    if (bits.back() == 0) {
      // (t_n - x) stays positive to the left of t_n
      factors.emplace_back(nodes.back(), 1);
      sign = -sign;
      bits.pop_back();
      nodes.pop_back();
      continue;
    }
    break;
  }

  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
      if (bits[i] == 0 && bits[i + 1] == 0) {
        // ends are 1 here, so digits i, i+1 pair with nodes t_i, t_{i+1}
        factors.emplace_back(nodes[i - 1], 1);
        factors.emplace_back(nodes[i], 1);
        bits.erase(bits.begin() + static_cast<long>(i), bits.begin() + static_cast<long>(i) + 2);
        nodes.erase(nodes.begin() + static_cast<long>(i) - 1,
                    nodes.begin() + static_cast<long>(i) + 1);
        stripped = true;
        break;
      }
    }
  }

  int n = static_cast<int>(nodes.size());
  for (int i = 1; i <= n; ++i)
    if (bits[static_cast<std::size_t>(i - 1)] == 1 && bits[static_cast<std::size_t>(i)] == 1)
      factors.emplace_back(nodes[static_cast<std::size_t>(i - 1)], 2);
  for (int j = 0; j <= n; ++j)
    if (bits[static_cast<std::size_t>(j)] == 0) {
      factors.emplace_back(nodes[static_cast<std::size_t>(j - 1)], 1);
      factors.emplace_back(nodes[static_cast<std::size_t>(j)], 1);
    }

  return FactoredPoly::make(sign, std::move(factors));
}

}  // namespace

FactoredPoly extremal_poly(const OmegaSeq& w, const NodeSystem& t) {
  if (w.size() != t.size() + 1)
    throw LengthMismatchError("omega length must be node count + 1");
  FactoredPoly p = extremal_impl(w.bits(), t.values());
  assert(p.degree() == tau(w));
  return p;
}

DnBranch dn(const CompactSet& omega, int n) {
  if (n < 1) throw IndexOutOfRangeError("n must be positive");
  if (omega.is_finite()) {
    long c = omega.cardinality();
    if (n > c) throw TooManyNodesError("finite set with fewer than n points has no positive basis");
    if (n == 1) return {DnTag::SMALL_N, 0};
    if (n == 2) return {DnTag::SMALL_N, 1};
    return {DnTag::FINITE, n == c ? n - 1 : n};
  }
  if (n == 1) return {DnTag::SMALL_N, 0};
  if (n == 2) return {DnTag::SMALL_N, 1};
  TopoProfile tp = profile(omega);
  int lam = tp.lambda;
  if (2 * lam > n) return {DnTag::LAMBDA_LARGE, n};
  if (n % 2 == 0 && lam == n / 2) return {DnTag::LAMBDA_HALF_EVEN, n};
  if (n % 2 == 1 && lam == (n - 1) / 2)
    return {DnTag::LAMBDA_HALF_ODD, n + tp.theta_left * tp.theta_right};
  if (lam >= 1)
    return {DnTag::LAMBDA_SMALL, 2 * (n - 1 - lam) + tp.theta_left + tp.theta_right};
  return {DnTag::INTERVAL, 2 * n - 3};
}

int max_dim(const CompactSet& omega, int m) {
  if (omega.is_finite()) throw FiniteSetError("max_dim needs an infinite set");
  if (m < 0) throw IndexOutOfRangeError("m must be nonnegative");
  // d_1 = 0 and d_2 = 1 make the answers for m <= 1 immediate; the closed
  // form below assumes m >= 2.
  if (m == 0) return 1;
  if (m == 1) return 2;
  TopoProfile tp = profile(omega);
  int lam = tp.lambda;
  if (2 * lam >= m) return m;
  if (2 * lam == m - 1) return m - tp.theta_left * tp.theta_right;
  if (lam >= 1) return (m - tp.theta_left - tp.theta_right) / 2 + 1 + lam;
  return (m + 3) / 2;
}

namespace {

FactoredPoly linear(const Rational& root, bool downward) {
  // (x - root), or (root - x) when downward
  return FactoredPoly(downward ? -1 : 1, {{root, 1}});
}

}  // namespace

BasisFamily interval_basis(const Rational& a, const Rational& b, int m, IntervalVariant variant) {
  if (!(a < b)) throw BadIntervalError("interval basis needs a < b");
  if (m < 1) throw IndexOutOfRangeError("m must be >= 1");
  if (variant != IntervalVariant::STANDARD && m % 2 != 0)
    throw BadVariantParityError("this family shape exists only for even m");

  int n = (m + 3) / 2;
  std::vector<Rational> ts;
  ts.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    ts.push_back(a + Rational(i - 1) * (b - a) / Rational(n - 1));

  std::vector<FactoredPoly> polys;
  polys.reserve(static_cast<std::size_t>(n));
  auto interior_squares = [&](int skip) {
    // prod_{i=2..n-1, i != skip} (x - t_i)^2
    std::vector<std::pair<Rational, int>> fs;
    for (int i = 2; i <= n - 1; ++i)
      if (i != skip) fs.emplace_back(ts[static_cast<std::size_t>(i - 1)], 2);
    return FactoredPoly::make(1, std::move(fs));
  };
  auto squares_from = [&](int from, int to, int skip) {
    // prod_{k=from..to, k != skip} (x - t_k)^2
    std::vector<std::pair<Rational, int>> fs;
    for (int k = from; k <= to; ++k)
      if (k != skip) fs.emplace_back(ts[static_cast<std::size_t>(k - 1)], 2);
    return FactoredPoly::make(1, std::move(fs));
  };
  if (variant == IntervalVariant::STANDARD) {
    polys.push_back(linear(ts.back(), true) * interior_squares(0));
    for (int k = 2; k <= n - 1; ++k)
      polys.push_back(linear(ts.front(), false) * linear(ts.back(), true) * interior_squares(k));
    polys.push_back(linear(ts.front(), false) * interior_squares(0));
  } else if (variant == IntervalVariant::LEFT_ANCHORED) {
    polys.push_back(squares_from(2, n, 0));
    for (int i = 2; i <= n; ++i)
      polys.push_back(linear(ts.front(), false) * squares_from(2, n, i));
  } else if (variant == IntervalVariant::RIGHT_ANCHORED) {
    for (int i = 1; i <= n - 1; ++i)
      polys.push_back(linear(ts.back(), true) * squares_from(1, n - 1, i));
    polys.push_back(squares_from(1, n - 1, 0));
  } else {
    for (int i = 1; i <= n; ++i) polys.push_back(squares_from(1, n, i));
  }

  NodeSystem nodes(ts);
  CompactSet omega = CompactSet::canonicalize({Interval{a, b}});
  int maxdeg = 0;
  for (const FactoredPoly& p : polys) maxdeg = std::max(maxdeg, p.degree());
  int sig = sigma(omega_type(omega, nodes));
  return BasisFamily{std::move(omega), std::move(nodes), std::move(polys), maxdeg, sig};
}

namespace {

// Canonical maximum free family of holes: leftmost greedy choice (odd chain
// positions), except that an even-length chain whose first hole starts at
// min(omega) selects the even positions instead, avoiding that endpoint.
std::vector<Hole> canonical_max_family(const CompactSet& omega) {
  std::vector<Hole> hs = holes(omega);
  std::vector<Hole> family;
  std::size_t i = 0;
  while (i < hs.size()) {
    std::size_t start = i;
    while (i + 1 < hs.size() && hs[i].beta == hs[i + 1].alpha) ++i;
    std::size_t len = i - start + 1;
    bool touches_min = hs[start].alpha == omega.min();
    std::size_t first = (touches_min && len % 2 == 0) ? start + 1 : start;
    for (std::size_t p = first; p <= i; p += 2) family.push_back(hs[p]);
    ++i;
  }
  return family;
}

std::vector<Rational> endpoints_of(const std::vector<Hole>& family) {
  std::vector<Rational> pts;
  for (const Hole& h : family) {
    pts.push_back(h.alpha);
    pts.push_back(h.beta);
  }
  return pts;
}

const Interval& leftmost_nondegenerate(const CompactSet& omega) {
  for (const Interval& iv : omega.pieces())
    if (!iv.is_point()) return iv;
  throw DomainError("no nondegenerate piece");  // unreachable for infinite sets
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NodeSystem optimal_nodes(const CompactSet& omega, int n) {
  if (n < 1) throw IndexOutOfRangeError("n must be positive");
  if (omega.is_finite()) {
    long c = omega.cardinality();
    if (n > c) throw TooManyNodesError("finite set with fewer than n points has no positive basis");
    if (n == 1) return NodeSystem({omega.min()});
    if (n == 2) return NodeSystem({omega.min(), omega.max()});
    std::vector<Rational> first;
    for (int i = 0; i < n; ++i) first.push_back(omega.pieces()[static_cast<std::size_t>(i)].lo);
    return NodeSystem(std::move(first));
  }
  if (n == 1) return NodeSystem({omega.min()});
  if (n == 2) return NodeSystem({omega.min(), omega.max()});

  int lam = lambda(omega);
  if (lam == 0) {
    // single interval: endpoints plus equally spaced interior points
    std::vector<Rational> ts;
    for (int i = 1; i <= n; ++i)
      ts.push_back(omega.min() + Rational(i - 1) * (omega.max() - omega.min()) / Rational(n - 1));
    return NodeSystem(std::move(ts));
  }

  std::vector<Hole> family = canonical_max_family(omega);
  int k = n / 2;
  if (n % 2 == 0 && lam >= k) {
    family.resize(static_cast<std::size_t>(k));
    return NodeSystem(sorted_unique(endpoints_of(family)));
  }
  if (n % 2 == 1) {
    k = (n - 1) / 2;
    if (lam >= k + 1) {
      // k holes clear of min(omega), plus min(omega) itself
      std::vector<Hole> picked;
      for (const Hole& h : family) {
        if (h.alpha == omega.min()) continue;
        picked.push_back(h);
        if (static_cast<int>(picked.size()) == k) break;
      }
      std::vector<Rational> pts = endpoints_of(picked);
      pts.push_back(omega.min());
      return NodeSystem(sorted_unique(std::move(pts)));
    }
    if (lam == k) {
      bool touches_a = false, touches_b = false;
      for (const Hole& h : family) {
        if (h.alpha == omega.min()) touches_a = true;
        if (h.beta == omega.max()) touches_b = true;
      }
      std::vector<Rational> pts = endpoints_of(family);
      if (!touches_a)
        pts.push_back(omega.min());
      else if (!touches_b)
        pts.push_back(omega.max());
      else {
        const Interval& piece = leftmost_nondegenerate(omega);
        pts.push_back((piece.lo + piece.hi) / 2);
      }
      return NodeSystem(sorted_unique(std::move(pts)));
    }
  }

  // 1 <= lambda <= n/2 - 1: all free-hole endpoints, both extremes, and an
  // equally spaced fill inside the leftmost nondegenerate piece.
  std::vector<Rational> pts = endpoints_of(family);
  pts.push_back(omega.min());
  pts.push_back(omega.max());
  pts = sorted_unique(std::move(pts));
  int fill = n - static_cast<int>(pts.size());
  const Interval& piece = leftmost_nondegenerate(omega);
  for (int i = 1; i <= fill; ++i)
    pts.push_back(piece.lo + Rational(i) * (piece.hi - piece.lo) / Rational(fill + 1));
  return NodeSystem(sorted_unique(std::move(pts)));
}

BasisFamily basis_for_nodes(const CompactSet& omega, const NodeSystem& t) {
  OmegaSeq w = omega_type(omega, t);  // also validates membership
  int n = t.size();
  std::vector<FactoredPoly> polys;
  polys.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    OmegaSeq wj = contract(w, j);
    std::vector<Rational> rest;
    for (int i = 1; i <= n; ++i)
      if (i != j) rest.push_back(t.at(i));
    FactoredPoly b = extremal_impl(wj.bits(), std::move(rest));
    if (b.sign_at(t.at(j)) < 0) b.flip_sign();
    polys.push_back(std::move(b));
  }
  int maxdeg = 0;
  for (const FactoredPoly& p : polys) maxdeg = std::max(maxdeg, p.degree());
  int sig = sigma(w);
  assert(maxdeg == sig);
  return BasisFamily{omega, t, std::move(polys), maxdeg, sig};
}

}  // namespace posbasis
