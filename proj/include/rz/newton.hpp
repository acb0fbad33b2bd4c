#pragma once
// Newton polygons of isocrystals: multisets of coprime slope pairs.
//
// A summand (m, n) stands for a simple isocrystal of slope m/(m+n) and height
// m+n.  Polygons are kept sorted by (slope, m) ascending, which makes the
// representation canonical: equal slopes of coprime pairs force equal pairs.
// etale = (0,1), multiplicative = (1,0), supersingular = (1,1).

#include <string>
#include <vector>

#include "rz/rational.hpp"

namespace rz {

struct SimpleSummand {
  int m = 0, n = 0;
  Rat slope() const { return Rat(m, m + n); }
  int height() const { return m + n; }
  bool operator==(const SimpleSummand&) const = default;
};

struct NewtonPolygon {
  // sorted by (slope, m); may be empty only as an intermediate value
  // (block splits); the parse/report boundary rejects empty input.
  std::vector<SimpleSummand> summands;

  int height() const;
  int length() const { return (int)summands.size(); }  // l = #summands
  bool operator==(const NewtonPolygon&) const = default;
  std::string str() const;  // "m:n,m:n,..."
};

// Build from unsorted coprime pairs; validates and sorts.
NewtonPolygon make_polygon(std::vector<SimpleSummand> parts);

// "m:n,m:n,...": raises ParseError / NonCoprime / EmptyPolygon.
NewtonPolygon parse_newton(const std::string& text);

// summand-wise (m,n) -> (n,m), re-sorted
NewtonPolygon dual(const NewtonPolygon& np);

bool is_symmetric(const NewtonPolygon& np);

// (etale height, middle height, multiplicative height): heights of the
// slope-0 part, the 0<slope<1 part, and the slope-1 part.
struct Parts {
  int etale = 0, middle = 0, mult = 0;
};
Parts decompose_parts(const NewtonPolygon& np);

// Polarized splitting N = N0 + N_half + N1 of a symmetric polygon:
// N0 takes slopes < 1/2 plus half the supersingular summands (rounded down),
// N_half is one supersingular summand when their multiplicity is odd,
// N1 is the dual block of N0.  Raises NotSymmetric.
struct PolarizedSplit {
  NewtonPolygon n0;
  bool has_middle = false;
  NewtonPolygon n1;
};
PolarizedSplit split_polarized(const NewtonPolygon& np);

// m-invariant: floor(1/2 * sum_j min(m_j, n_j)).  Defined for any polygon.
long long m_invariant(const NewtonPolygon& np);

// Alternative evaluation used for cross-validation, valid for symmetric
// polygons only: floor(sum_{m_j < n_j} m_j + (1/2)#{j : m_j = n_j = 1}).
long long m_invariant_alt(const NewtonPolygon& np);

// All symmetric polygons of height 2h, canonically ordered (lexicographic in
// the sorted summand lists).  h >= 1.
std::vector<NewtonPolygon> enumerate_symmetric(int h);

}  // namespace rz
