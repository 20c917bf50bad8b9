#include "posbasis/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "posbasis/bernstein.hpp"
#include "posbasis/errors.hpp"
#include "posbasis/linalg.hpp"

namespace posbasis {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // m x ncols
  std::vector<Rational> rhs;                // m, kept >= 0
  std::vector<int> basis;                   // basic column per row

  void pivot(std::size_t r, std::size_t c) {
    Rational piv = rows[r][c];
    for (Rational& v : rows[r]) v /= piv;
    rhs[r] /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].sign() == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = static_cast<int>(c);
  }

  // Maximize cost.x from the current basic feasible point. Bland's rule:
  // lowest-index entering column, lowest basic index on ratio ties.
  Rational maximize(const std::vector<Rational>& cost) {
    for (;;) {
      std::size_t ncols = cost.size();
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
        Rational rc = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const Rational& cb = cost[static_cast<std::size_t>(basis[i])];
          if (cb.sign() != 0) rc -= cb * rows[i][j];
        }
        if (rc.sign() > 0) enter = j;
      }
      if (enter == ncols) break;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave]))
          leave = i, best = ratio;
      }
      if (leave == rows.size()) throw TooLargeError("unbounded linear program");
      pivot(leave, enter);
    }
    Rational value(0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      value += cost[static_cast<std::size_t>(basis[i])] * rhs[i];
    return value;
  }
};

}  // namespace

std::optional<Rational> simplex_maximize(const std::vector<Rational>& c,
                                         const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b) {
  std::size_t m = A.size(), n = c.size();
  Tableau t;
  t.rows.resize(m);
  t.rhs = b;
  for (std::size_t i = 0; i < m; ++i) {
    t.rows[i] = A[i];
    t.rows[i].resize(n + m, Rational(0));
    if (t.rhs[i].sign() < 0) {
      for (Rational& v : t.rows[i]) v = -v;
      t.rhs[i] = -t.rhs[i];
    }
    t.rows[i][n + i] = Rational(1);  // artificial
    t.basis.push_back(static_cast<int>(n + i));
  }

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(-1);
  if (t.maximize(phase1).sign() < 0) return std::nullopt;

  // Drive leftover artificials out of the basis; redundant rows get dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < static_cast<int>(n)) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t.rows[i][j].sign() == 0) ++j;
    if (j < n) {
      t.pivot(i, j);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }
  for (auto& row : t.rows) row.resize(n);

  return t.maximize(c);
}

bool cone_nontrivial(const ConeProblem& problem) {
  int d = problem.dim;
  if (d < 1) throw DomainError("cone dimension must be positive");
  for (const auto& row : problem.rows)
    if (static_cast<int>(row.size()) != d) throw LengthMismatchError("cone row length");
  if (problem.rows.empty()) return true;
  if (matrix_rank(problem.rows) < d) return true;

  // Full row rank: any nonzero feasible q has a strictly positive constraint
  // sum, so test the box LP over x = q + 1 in [0,2]^d.
  std::size_t m = problem.rows.size(), dd = static_cast<std::size_t>(d);
  std::size_t ncols = dd + m + dd;  // x, then s (Aq >= 0 slacks), then w (x <= 2 slacks)
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(ncols, Rational(0));
    Rational rsum(0);
    for (std::size_t j = 0; j < dd; ++j) {
      row[j] = problem.rows[i][j];
      rsum += problem.rows[i][j];
    }
    row[dd + i] = Rational(-1);
    A.push_back(std::move(row));
    b.push_back(rsum);
  }
  for (std::size_t j = 0; j < dd; ++j) {
    std::vector<Rational> row(ncols, Rational(0));
    row[j] = Rational(1);
    row[dd + m + j] = Rational(1);
    A.push_back(std::move(row));
    b.push_back(Rational(2));
  }
  std::vector<Rational> cost(ncols, Rational(0));
  Rational threshold(0);
  for (std::size_t j = 0; j < dd; ++j) {
    Rational colsum(0);
    for (std::size_t i = 0; i < m; ++i) colsum += problem.rows[i][j];
    cost[j] = colsum;
    threshold += colsum;
  }
  auto value = simplex_maximize(cost, A, b);
  if (!value) throw DomainError("cone LP infeasible");  // q = 0 is always feasible
  return threshold < *value;
}

namespace {

void check_witnesses(const OmegaSeq& w, const NodeSystem& t, const Witnesses& x) {
  int n = t.size();
  if (w.size() != n + 1) throw LengthMismatchError("omega length must be node count + 1");
  for (int j = 0; j <= n; ++j) {
    if (w[j] == 0) continue;
    auto it = x.at_gap.find(j);
    if (it == x.at_gap.end()) throw DomainError("missing witness for a 1-gap");
    if (j >= 1 && !(t.at(j) < it->second)) throw DomainError("witness outside its gap");
    if (j < n && !(it->second < t.at(j + 1))) throw DomainError("witness outside its gap");
  }
}

}  // namespace

Witnesses canonical_abstract_witnesses(const OmegaSeq& w, const NodeSystem& t) {
  int n = t.size();
  if (w.size() != n + 1) throw LengthMismatchError("omega length must be node count + 1");
  Witnesses x;
  for (int j = 0; j <= n; ++j) {
    if (w[j] == 0) continue;
    if (j == 0)
      x.at_gap.emplace(0, t.at(1) - 1);
    else if (j == n)
      x.at_gap.emplace(n, t.at(n) + 1);
    else
      x.at_gap.emplace(j, (t.at(j) + t.at(j + 1)) / 2);
  }
  return x;
}

int tau_oracle(const OmegaSeq& w, const NodeSystem& t, const Witnesses& x) {
  check_witnesses(w, t, x);
  int n = t.size();
  for (int D = n; D <= 2 * n; ++D) {
    int d = D - n + 1;  // coefficients of the cofactor q, p = q * prod(x - t_i)
    ConeProblem cp;
    cp.dim = d;
    for (const auto& [gap, xj] : x.at_gap) {
      if (gap < 0 || gap > n || w[gap] == 0) continue;
      int s = 1;
      for (int i = 1; i <= n; ++i) {
        int ds = (xj - t.at(i)).sign();
        if (ds < 0) s = -s;
      }
      std::vector<Rational> row(static_cast<std::size_t>(d));
      Rational pw(1);
      for (int c = 0; c < d; ++c) {
        row[static_cast<std::size_t>(c)] = Rational(s) * pw;
        pw *= xj;
      }
      cp.rows.push_back(std::move(row));
    }
    if (cone_nontrivial(cp)) return D;
  }
  throw DomainError("tau oracle failed to terminate by 2n");  // unreachable
}

namespace {

struct PatternEnumerator {
  const CompactSet& omega;
  int n;
  std::map<std::string, int> tau_memo;  // contracted type -> independent tau
  int best = -1;

  // Memoized independent check that the formula value matches the LP search;
  // tau depends only on the type, so canonical nodes 1..n suffice.
  void cross_check(const OmegaSeq& w) {
    if (w.nodes() < 1) return;
    auto [it, fresh] = tau_memo.try_emplace(w.str(), -1);
    if (fresh) {
      std::vector<Rational> nodes;
      for (int i = 1; i <= w.nodes(); ++i) nodes.emplace_back(i);
      NodeSystem t(std::move(nodes));
      it->second = tau_oracle(w, t, canonical_abstract_witnesses(w, t));
    }
    if (it->second != tau(w))
      throw DomainError("tau formula disagrees with the LP oracle for " + w.str());
  }

  void visit(const std::vector<Rational>& nodes) {
    NodeSystem t(nodes);
    OmegaSeq w = omega_type(omega, t);
    int sig = 0;
    for (int j = 1; j <= t.size(); ++j) {
      OmegaSeq wj = contract(w, j);
      if (n <= 4) cross_check(wj);
      sig = std::max(sig, tau(wj));
    }
    if (best < 0 || sig < best) best = sig;
  }

  void recurse(std::size_t idx, int remaining, std::vector<Rational>& nodes) {
    if (idx == omega.pieces().size()) {
      if (remaining == 0 && !nodes.empty()) visit(nodes);
      return;
    }
    const Interval& piece = omega.pieces()[idx];
    if (piece.is_point()) {
      recurse(idx + 1, remaining, nodes);
      if (remaining >= 1) {
        nodes.push_back(piece.lo);
        recurse(idx + 1, remaining - 1, nodes);
        nodes.pop_back();
      }
      return;
    }
    for (int left = 0; left <= 1; ++left)
      for (int interior = 0; interior + left <= remaining; ++interior)
        for (int right = 0; right + interior + left <= remaining; ++right) {
          std::size_t mark = nodes.size();
          if (left) nodes.push_back(piece.lo);
          for (int i = 1; i <= interior; ++i)
            nodes.push_back(piece.lo + Rational(i) * (piece.hi - piece.lo) / Rational(interior + 1));
          if (right) nodes.push_back(piece.hi);
          recurse(idx + 1, remaining - left - interior - right, nodes);
          nodes.resize(mark);
        }
  }
};

}  // namespace

int dn_oracle(const CompactSet& omega, int n) {
  if (n < 1) throw IndexOutOfRangeError("n must be positive");
  if (n > 6 || omega.pieces().size() > 6)
    throw TooLargeError("dn oracle is desk scale: n <= 6 and at most 6 pieces");
  if (omega.is_finite() && n > omega.cardinality())
    throw TooManyNodesError("finite set with fewer than n points has no positive basis");
  PatternEnumerator e{omega, n};
  std::vector<Rational> nodes;
  e.recurse(0, n, nodes);
  if (e.best < 0) throw DomainError("no node placement found");
  return e.best;
}

bool lorentz_oracle(const Polynomial& p, int N) {
  for (const Rational& a : to_bernstein(p, N))
    if (a.sign() < 0) return false;
  return true;
}

}  // namespace posbasis
