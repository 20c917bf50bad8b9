#ifndef POSBASIS_SIGN_ANALYSIS_HPP
#define POSBASIS_SIGN_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "posbasis/compact_set.hpp"
#include "posbasis/polynomial.hpp"

namespace posbasis {

// Location of one distinct real root: either an exact rational value or an
// open isolating interval (lo, hi) containing exactly one (irrational) root,
// with p nonzero at both ends.
struct RootLoc {
  bool exact;
  Rational value;
  Rational lo, hi;

  static RootLoc at(Rational v) { return RootLoc{true, std::move(v), {}, {}}; }
  static RootLoc in(Rational a, Rational b) {
    return RootLoc{false, {}, std::move(a), std::move(b)};
  }
  // Lower bound of the location, for ordering.
  const Rational& key() const { return exact ? value : lo; }
};

struct SignReport {
  bool nonneg = false;  // p >= 0 everywhere on [lo, hi]
  bool strict = false;  // p > 0 everywhere on [lo, hi]
  std::vector<RootLoc> roots;
};

// Exact sign analysis on [lo, hi] via Sturm sequences; no floating point.
SignReport sturm_sign_report(const Polynomial& p, const Rational& lo, const Rational& hi);

// All distinct real roots of p in [lo, hi], increasing.
std::vector<RootLoc> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// p(x) >= 0 for every x in omega. Interval pieces via Sturm, points via eval.
bool is_nonneg_on(const Polynomial& p, const CompactSet& omega);

// A rational x in omega with p(x) < 0, when one exists.
std::optional<Rational> negativity_witness(const Polynomial& p, const CompactSet& omega);

// The rational with smallest denominator in the open interval (lo, hi).
Rational simplest_in_open(const Rational& lo, const Rational& hi);

}  // namespace posbasis

#endif
