#include "posbasis/omega.hpp"

#include <algorithm>

#include "posbasis/errors.hpp"

namespace posbasis {

OmegaSeq::OmegaSeq(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DomainError("omega sequence must be nonempty");
  for (int b : bits_)
    if (b != 0 && b != 1) throw DomainError("omega digits must be 0 or 1");
}

OmegaSeq OmegaSeq::from_string(std::string_view digits) {
  std::vector<int> bits;
  bits.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      throw ParseError("omega digit must be 0 or 1", i);
  }
  return OmegaSeq(std::move(bits));
}

OmegaSeq OmegaSeq::zeros(int length) { return OmegaSeq(std::vector<int>(length, 0)); }
OmegaSeq OmegaSeq::ones(int length) { return OmegaSeq(std::vector<int>(length, 1)); }

std::string OmegaSeq::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (int b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

int count_N(const OmegaSeq& w) {
  int n = 0;
  for (int b : w.bits()) n += b;
  return n;
}

int count_K(const OmegaSeq& w) {
  const auto& bits = w.bits();
  auto first1 = std::find(bits.begin(), bits.end(), 1);
  if (first1 == bits.end()) return 0;
  auto last1 = std::find(bits.rbegin(), bits.rend(), 1).base() - 1;
  int k = 0;
  int run = 0;
  for (auto it = first1; it != last1; ++it) {
    if (*it == 0) {
      ++run;
    } else if (run > 0) {
      if (run % 2 == 1) ++k;
      run = 0;
    }
  }
  if (run > 0 && run % 2 == 1) ++k;  // run ending just before last1, which is a 1
  return k;
}

int nu(const OmegaSeq& w) { return count_N(w) == 0 ? 1 : 0; }

int tau(const OmegaSeq& w) { return w.nodes() - 1 + count_N(w) - count_K(w) + nu(w); }

OmegaSeq contract(const OmegaSeq& w, int j) {
  int n = w.nodes();
  if (j < 1 || j > n) throw IndexOutOfRangeError("contract index out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i <= j - 2; ++i) out.push_back(w[i]);
  out.push_back(1);
  for (int i = j + 1; i <= n; ++i) out.push_back(w[i]);
  return OmegaSeq(std::move(out));
}

int sigma(const OmegaSeq& w) {
  int n = w.nodes();
  if (n < 1) throw DomainError("sigma needs at least one node");
  int best = 0;
  for (int j = 1; j <= n; ++j) best = std::max(best, tau(contract(w, j)));
  return best;
}

int sigma_closed(const OmegaSeq& w) {
  int n = w.nodes();
  if (n < 1) throw DomainError("sigma needs at least one node");
  int N = count_N(w);
  if (N == 0) return n - 1;
  if (N == n + 1) return 2 * n - 2;
  auto all_ones_between = [&](int from, int to) {
    for (int i = from; i <= to; ++i)
      if (w[i] == 0) return false;
    return true;
  };
  if (w[0] == 0 && w[n] == 0 && all_ones_between(1, n - 1)) return 2 * n - 3;
  if (w[0] == 0 && all_ones_between(1, n)) return 2 * n - 2;
  if (w[n] == 0 && all_ones_between(0, n - 1)) return 2 * n - 2;
  return tau(w);
}

}  // namespace posbasis
