#include "posbasis/compact_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "posbasis/errors.hpp"

namespace posbasis {

CompactSet CompactSet::canonicalize(std::vector<Interval> raw) {
  if (raw.empty()) throw EmptySetError();
  for (const Interval& iv : raw)
    if (iv.hi < iv.lo)
      throw BadIntervalError("interval with lo > hi: [" + iv.lo.str() + "," + iv.hi.str() + "]");
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  CompactSet s;
  for (Interval& iv : raw) {
    if (!s.pieces_.empty() && !(s.pieces_.back().hi < iv.lo)) {
      if (s.pieces_.back().hi < iv.hi) s.pieces_.back().hi = iv.hi;
    } else {
      s.pieces_.push_back(std::move(iv));
    }
  }
  return s;
}

bool CompactSet::contains(const Rational& x) const {
  for (const Interval& iv : pieces_) {
    if (x < iv.lo) return false;
    if (!(iv.hi < x)) return true;
  }
  return false;
}

bool CompactSet::is_finite() const {
  for (const Interval& iv : pieces_)
    if (!iv.is_point()) return false;
  return true;
}

long CompactSet::cardinality() const {
  if (!is_finite()) throw DomainError("cardinality of an infinite set");
  return static_cast<long>(pieces_.size());
}

bool operator==(const CompactSet& a, const CompactSet& b) {
  if (a.pieces_.size() != b.pieces_.size()) return false;
  for (std::size_t i = 0; i < a.pieces_.size(); ++i)
    if (!(a.pieces_[i].lo == b.pieces_[i].lo && a.pieces_[i].hi == b.pieces_[i].hi)) return false;
  return true;
}

std::vector<Hole> holes(const CompactSet& omega) {
  std::vector<Hole> out;
  const auto& p = omega.pieces();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    out.push_back(Hole{p[i].hi, p[i + 1].lo, i, i + 1});
  return out;
}

namespace {
// Maximal runs of endpoint-sharing holes. Two consecutive holes are adjacent
// exactly when the piece between them is a point.
std::vector<int> hole_chain_lengths(const CompactSet& omega) {
  std::vector<Hole> hs = holes(omega);
  std::vector<int> lens;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (i > 0 && hs[i - 1].beta == hs[i].alpha)
      ++lens.back();
    else
      lens.push_back(1);
  }
  return lens;
}
}  // namespace

int lambda(const CompactSet& omega) {
  int total = 0;
  for (int len : hole_chain_lengths(omega)) total += (len + 1) / 2;
  return total;
}

TopoProfile profile(const CompactSet& omega) {
  TopoProfile tp;
  tp.holes = holes(omega);
  tp.lambda = lambda(omega);
  tp.is_infinite = !omega.is_finite();
  if (!tp.is_infinite) {
    tp.cardinality = omega.cardinality();
    return tp;
  }
  // With this representation the limit points are exactly the union of the
  // nondegenerate pieces.
  Rational hull_lo, hull_hi;
  bool seen = false;
  for (const Interval& iv : omega.pieces()) {
    if (iv.is_point()) continue;
    if (!seen) {
      hull_lo = iv.lo;
      seen = true;
    }
    hull_hi = iv.hi;
  }
  tp.limit_point_hull = Interval{hull_lo, hull_hi};
  for (const Interval& iv : omega.pieces()) {
    if (!iv.is_point()) continue;
    if (iv.lo < hull_lo) tp.eccentric_left.push_back(iv.lo);
    if (hull_hi < iv.lo) tp.eccentric_right.push_back(iv.lo);
  }
  tp.theta_left = static_cast<int>(tp.eccentric_left.size() % 2);
  tp.theta_right = static_cast<int>(tp.eccentric_right.size() % 2);
  return tp;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  Rational rat() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ParseError("expected a rational", start);
    std::string num(text.substr(start, pos - start));
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) throw ParseError("expected a denominator", dstart);
      std::string den(text.substr(dstart, pos - dstart));
      return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num));
  }
};

}  // namespace

CompactSet parse_set_expr(std::string_view text) {
  Cursor c{text};
  std::vector<Interval> pieces;
  for (;;) {
    char ch = c.peek();
    if (ch == '[') {
      c.expect('[');
      Rational lo = c.rat();
      c.expect(',');
      Rational hi = c.rat();
      c.expect(']');
      pieces.push_back(Interval{lo, hi});
    } else if (ch == '{') {
      c.expect('{');
      Rational x = c.rat();
      c.expect('}');
      pieces.push_back(Interval{x, x});
    } else {
      throw ParseError("expected '[' or '{'", c.pos);
    }
    if (c.eof()) break;
    char u = c.peek();
    if (u != 'U' && u != 'u') throw ParseError("expected 'U'", c.pos);
    ++c.pos;
  }
  return CompactSet::canonicalize(std::move(pieces));
}

std::string to_set_expr(const CompactSet& omega) {
  std::ostringstream os;
  bool first = true;
  for (const Interval& iv : omega.pieces()) {
    if (!first) os << " U ";
    if (iv.is_point())
      os << "{" << iv.lo.str() << "}";
    else
      os << "[" << iv.lo.str() << "," << iv.hi.str() << "]";
    first = false;
  }
  return os.str();
}

}  // namespace posbasis
