#ifndef POSBASIS_COMPACT_SET_HPP
#define POSBASIS_COMPACT_SET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posbasis/rational.hpp"

namespace posbasis {

struct Interval {
  Rational lo, hi;
  bool is_point() const { return lo == hi; }
};

// Canonical finite union of disjoint closed rational intervals; degenerate
// pieces are isolated points. Consecutive pieces are separated by strictly
// positive gaps (touching input pieces get merged).
class CompactSet {
 public:
  // Sorts, merges overlapping or touching intervals, establishes invariants.
  static CompactSet canonicalize(std::vector<Interval> raw_pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  const Rational& min() const { return pieces_.front().lo; }
  const Rational& max() const { return pieces_.back().hi; }

  bool contains(const Rational& x) const;
  bool is_finite() const;
  // Number of points; only when finite.
  long cardinality() const;

  friend bool operator==(const CompactSet& a, const CompactSet& b);

 private:
  CompactSet() = default;
  std::vector<Interval> pieces_;
};

// A bounded connected component of the complement, I_k = (alpha, beta).
struct Hole {
  Rational alpha, beta;
  std::size_t left_piece_index, right_piece_index;
};

struct TopoProfile {
  std::vector<Hole> holes;
  int lambda = 0;
  bool is_infinite = false;
  std::optional<long> cardinality;            // set when finite
  std::optional<Interval> limit_point_hull;   // conv of the limit points; absent when finite
  std::vector<Rational> eccentric_left, eccentric_right;
  int theta_left = 0, theta_right = 0;        // parities; meaningful only when infinite
};

std::vector<Hole> holes(const CompactSet& omega);

// Maximum size of a free family of holes (pairwise disjoint closures).
// The hole adjacency graph is a disjoint union of paths, so this is a sum of
// ceil(chain/2) over maximal chains of endpoint-sharing holes.
int lambda(const CompactSet& omega);

TopoProfile profile(const CompactSet& omega);

inline bool membership(const CompactSet& omega, const Rational& x) { return omega.contains(x); }

// Text grammar: set := piece ('U' piece)*, piece := '[' rat ',' rat ']' | '{' rat '}',
// rat := integer ('/' positive-integer)?  — whitespace insensitive.
CompactSet parse_set_expr(std::string_view text);
std::string to_set_expr(const CompactSet& omega);

}  // namespace posbasis

#endif
