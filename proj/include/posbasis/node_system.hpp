#ifndef POSBASIS_NODE_SYSTEM_HPP
#define POSBASIS_NODE_SYSTEM_HPP

#include <map>
#include <vector>

#include "posbasis/compact_set.hpp"
#include "posbasis/omega.hpp"
#include "posbasis/rational.hpp"

namespace posbasis {

// Strictly increasing nodes t_1 < ... < t_n; membership in the set they were
// built against is checked by the operations that take both.
class NodeSystem {
 public:
  explicit NodeSystem(std::vector<Rational> nodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  // 1-based, matching t_1..t_n.
  const Rational& at(int j) const;
  const std::vector<Rational>& values() const { return nodes_; }

  friend bool operator==(const NodeSystem& a, const NodeSystem& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  std::vector<Rational> nodes_;
};

// Type of t with respect to omega: digit j is 1 iff the open gap
// (t_j, t_{j+1}) meets the set, with t_0 = -inf and t_{n+1} = +inf.
OmegaSeq omega_type(const CompactSet& omega, const NodeSystem& t);

// One canonical witness per 1-gap: leftmost piece meeting the gap, the single
// intersection point if there is only one, otherwise the midpoint of the
// closure of the intersection.
struct Witnesses {
  std::map<int, Rational> at_gap;  // gap index -> witness
};
Witnesses witnesses(const CompactSet& omega, const NodeSystem& t);

// t with t_j removed (1-based); needs n >= 2.
NodeSystem remove_node(const NodeSystem& t, int j);

}  // namespace posbasis

#endif
