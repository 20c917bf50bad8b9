#ifndef POSBASIS_OMEGA_HPP
#define POSBASIS_OMEGA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace posbasis {

// The 0-1 type of a node system: digit j records whether the open gap between
// consecutive nodes t_j and t_{j+1} (with t_0 = -inf, t_{n+1} = +inf) meets
// the set. Length n+1 for n nodes; contractions of single-node systems have
// length 1, which is why n = 0 is admitted here.
class OmegaSeq {
 public:
  explicit OmegaSeq(std::vector<int> bits);
  static OmegaSeq from_string(std::string_view digits);
  static OmegaSeq zeros(int length);
  static OmegaSeq ones(int length);

  int size() const { return static_cast<int>(bits_.size()); }
  int nodes() const { return size() - 1; }  // n
  int operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& bits() const { return bits_; }
  std::string str() const;

  friend bool operator==(const OmegaSeq& a, const OmegaSeq& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<int> bits_;
};

// Number of 1 digits.
int count_N(const OmegaSeq& w);
// Number of maximal inner zero blocks of odd length (ones on both sides).
int count_K(const OmegaSeq& w);
// 1 iff every digit is 0.
int nu(const OmegaSeq& w);
// Minimal degree of a nonzero polynomial vanishing at all n nodes and
// nonnegative at one witness per 1-gap: n - 1 + N - K + nu.
int tau(const OmegaSeq& w);

// Remove node t_j: digits j-1 and j merge into a single 1. 1 <= j <= n.
OmegaSeq contract(const OmegaSeq& w, int j);

// max over j of tau(contract(w, j)) — the least achievable maximal degree of
// a basis with nodes of this type.
int sigma(const OmegaSeq& w);
// Same value from the closed branch table; cross-asserted against sigma in
// the tests rather than trusted alone.
int sigma_closed(const OmegaSeq& w);

}  // namespace posbasis

#endif
