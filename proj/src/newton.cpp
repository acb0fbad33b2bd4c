#include "rz/newton.hpp"

#include <algorithm>
#include <numeric>

namespace rz {

int NewtonPolygon::height() const {
  int t = 0;
  for (auto& s : summands) t += s.height();
  return t;
}

std::string NewtonPolygon::str() const {
  std::string out;
  for (size_t i = 0; i < summands.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(summands[i].m) + ":" + std::to_string(summands[i].n);
  }
  return out;
}

static bool summand_less(const SimpleSummand& a, const SimpleSummand& b) {
  // slope asc, then m asc (ties in slope cannot happen for distinct coprime
  // pairs, but keep the documented key)
  long long lhs = (long long)a.m * b.height();
  long long rhs = (long long)b.m * a.height();
  if (lhs != rhs) return lhs < rhs;
  return a.m < b.m;
}

static void validate_summand(const SimpleSummand& s) {
  if (s.m < 0 || s.n < 0 || (s.m == 0 && s.n == 0))
    throw ParseError("summand (" + std::to_string(s.m) + "," +
                     std::to_string(s.n) + ") out of range");
  if (std::gcd(s.m, s.n) != 1)
    throw NonCoprime("summand (" + std::to_string(s.m) + "," +
                     std::to_string(s.n) + ")");
}

NewtonPolygon make_polygon(std::vector<SimpleSummand> parts) {
  for (auto& s : parts) validate_summand(s);
  std::sort(parts.begin(), parts.end(), summand_less);
  return NewtonPolygon{std::move(parts)};
}

NewtonPolygon parse_newton(const std::string& text) {
  if (text.empty()) throw EmptyPolygon("no summands");
  std::vector<SimpleSummand> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
      throw ParseError("summand '" + tok + "' (want m:n)");
    if (tok.find(':', colon + 1) != std::string::npos)
      throw ParseError("summand '" + tok + "' has extra ':'");
    SimpleSummand s;
    try {
      size_t used = 0;
      s.m = std::stoi(tok.substr(0, colon), &used);
      if (used != colon) throw ParseError("summand '" + tok + "'");
      s.n = std::stoi(tok.substr(colon + 1), &used);
      if (used != tok.size() - colon - 1)
        throw ParseError("summand '" + tok + "'");
    } catch (const std::invalid_argument&) {
      throw ParseError("summand '" + tok + "' (want integers m:n)");
    } catch (const std::out_of_range&) {
      throw Overflow("summand '" + tok + "'");
    }
    validate_summand(s);
    parts.push_back(s);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw ParseError("trailing comma");
  }
  return make_polygon(std::move(parts));
}

NewtonPolygon dual(const NewtonPolygon& np) {
  std::vector<SimpleSummand> parts = np.summands;
  for (auto& s : parts) std::swap(s.m, s.n);
  std::sort(parts.begin(), parts.end(), summand_less);
  return NewtonPolygon{std::move(parts)};
}

bool is_symmetric(const NewtonPolygon& np) { return dual(np) == np; }

Parts decompose_parts(const NewtonPolygon& np) {
  Parts out;
  for (auto& s : np.summands) {
    if (s.m == 0)
      out.etale += s.height();
    else if (s.n == 0)
      out.mult += s.height();
    else
      out.middle += s.height();
  }
  return out;
}

PolarizedSplit split_polarized(const NewtonPolygon& np) {
  if (!is_symmetric(np)) throw NotSymmetric("polygon " + np.str());
  PolarizedSplit out;
  int ss = 0;
  for (auto& s : np.summands)
    if (s.m == 1 && s.n == 1) ++ss;
  for (int i = 0; i < ss / 2; ++i) out.n0.summands.push_back({1, 1});
  for (auto& s : np.summands)
    if (2 * s.m < s.height()) out.n0.summands.push_back(s);  // slope < 1/2
  out.n0 = make_polygon(std::move(out.n0.summands));
  out.has_middle = (ss % 2) != 0;
  out.n1 = dual(out.n0);
  return out;
}

long long m_invariant(const NewtonPolygon& np) {
  long long acc = 0;
  for (auto& s : np.summands) acc += std::min(s.m, s.n);
  return acc / 2;
}

long long m_invariant_alt(const NewtonPolygon& np) {
  if (!is_symmetric(np)) throw NotSymmetric("polygon " + np.str());
  long long twice = 0;  // work in halves to avoid rational plumbing
  for (auto& s : np.summands) {
    if (s.m < s.n) twice += 2 * s.m;
    if (s.m == 1 && s.n == 1) twice += 1;
  }
  return twice / 2;
}

namespace {
// Multisets of coprime pairs with slope < 1/2 (i.e. m < n, including (0,1))
// and total height exactly t, pairs nondecreasing in (slope, m).  min_from is
// passed by value: recursion reallocates cur, so pointers into it would
// dangle.  (0,1) has the least key, so it admits every candidate.
void low_halves(int t, SimpleSummand min_from, std::vector<SimpleSummand>& cur,
                std::vector<std::vector<SimpleSummand>>& out) {
  if (t == 0) {
    out.push_back(cur);
    return;
  }
  // candidates of height <= t with m < n, coprime, >= min_from
  for (int h = 1; h <= t; ++h) {
    for (int m = 0; 2 * m < h; ++m) {
      SimpleSummand s{m, h - m};
      if (std::gcd(s.m, s.n) != 1) continue;
      if (summand_less(s, min_from)) continue;
      cur.push_back(s);
      low_halves(t - h, s, cur, out);
      cur.pop_back();
    }
  }
}
}  // namespace

std::vector<NewtonPolygon> enumerate_symmetric(int h) {
  if (h < 1) throw IndexOutOfRange("half-height " + std::to_string(h));
  std::vector<NewtonPolygon> out;
  // A symmetric polygon is determined by its slope<1/2 part L (height t) and
  // the supersingular multiplicity h - t: heights add up as 2t + 2(h-t) = 2h.
  for (int t = 0; t <= h; ++t) {
    std::vector<std::vector<SimpleSummand>> lows;
    std::vector<SimpleSummand> cur;
    low_halves(t, SimpleSummand{0, 1}, cur, lows);
    for (auto& low : lows) {
      std::vector<SimpleSummand> parts = low;
      for (int i = 0; i < h - t; ++i) parts.push_back({1, 1});
      for (auto& s : low) parts.push_back({s.n, s.m});
      out.push_back(make_polygon(std::move(parts)));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NewtonPolygon& a, const NewtonPolygon& b) {
              return std::lexicographical_compare(
                  a.summands.begin(), a.summands.end(), b.summands.begin(),
                  b.summands.end(), summand_less);
            });
  return out;
}

}  // namespace rz
