#include "posbasis/node_system.hpp"

#include <optional>

#include "posbasis/errors.hpp"

namespace posbasis {

NodeSystem::NodeSystem(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw DomainError("node system must be nonempty");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i - 1] < nodes_[i]))
      throw DomainError("node system must be strictly increasing");
}

const Rational& NodeSystem::at(int j) const {
  if (j < 1 || j > size()) throw IndexOutOfRangeError("node index out of range");
  return nodes_[static_cast<std::size_t>(j - 1)];
}

namespace {

using Bound = std::optional<Rational>;  // nullopt = unbounded gap end

bool piece_meets_open_gap(const Interval& piece, const Bound& lo, const Bound& hi) {
  if (piece.is_point()) {
    if (lo && !(*lo < piece.lo)) return false;
    if (hi && !(piece.lo < *hi)) return false;
    return true;
  }
  if (lo && !(*lo < piece.hi)) return false;
  if (hi && !(piece.lo < *hi)) return false;
  return true;
}

void check_membership(const CompactSet& omega, const NodeSystem& t) {
  for (const Rational& x : t.values())
    if (!omega.contains(x)) throw NodeNotInSetError("node " + x.str() + " not in the set");
}

}  // namespace

OmegaSeq omega_type(const CompactSet& omega, const NodeSystem& t) {
  check_membership(omega, t);
  int n = t.size();
  std::vector<int> bits(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) {
    Bound lo = (j >= 1) ? Bound(t.at(j)) : Bound();
    Bound hi = (j < n) ? Bound(t.at(j + 1)) : Bound();
    for (const Interval& piece : omega.pieces()) {
      if (piece_meets_open_gap(piece, lo, hi)) {
        bits[static_cast<std::size_t>(j)] = 1;
        break;
      }
    }
  }
  return OmegaSeq(std::move(bits));
}

Witnesses witnesses(const CompactSet& omega, const NodeSystem& t) {
  OmegaSeq w = omega_type(omega, t);
  int n = t.size();
  Witnesses out;
  for (int j = 0; j <= n; ++j) {
    if (w[j] == 0) continue;
    Bound lo = (j >= 1) ? Bound(t.at(j)) : Bound();
    Bound hi = (j < n) ? Bound(t.at(j + 1)) : Bound();
    for (const Interval& piece : omega.pieces()) {
      if (!piece_meets_open_gap(piece, lo, hi)) continue;
      Rational left = (lo && piece.lo < *lo) ? *lo : piece.lo;
      Rational right = (hi && *hi < piece.hi) ? *hi : piece.hi;
      out.at_gap.emplace(j, left == right ? left : (left + right) / 2);
      break;
    }
  }
  return out;
}

NodeSystem remove_node(const NodeSystem& t, int j) {
  int n = t.size();
  if (n < 2) throw IndexOutOfRangeError("cannot remove the only node");
  if (j < 1 || j > n) throw IndexOutOfRangeError("node index out of range");
  std::vector<Rational> rest;
  rest.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i)
    if (i != j) rest.push_back(t.at(i));
  return NodeSystem(std::move(rest));
}

}  // namespace posbasis
