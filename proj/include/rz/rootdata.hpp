#pragma once
// Cocharacter bookkeeping for the group of symplectic similitudes of rank h.
// A coweight is stored as (a_1..a_h; c): the full 2h-vector is
// (a_1,...,a_h, c-a_h,...,c-a_1), i.e. entries pair to the multiplier c.
// Weight pairings are evaluated against the centered entries a_k - c/2, so
// central cocharacters (a_k = c/2) pair to zero.

#include <vector>

#include "rz/newton.hpp"
#include "rz/rational.hpp"

namespace rz {

struct Coweight {
  std::vector<Rat> a;  // a_1..a_h
  Rat c;               // similitude multiplier exponent

  int rank() const { return (int)a.size(); }
  std::vector<Rat> full_vector() const;  // length 2h
  // dominance for the standard Borel: a_1 >= ... >= a_h >= c/2
  bool is_dominant() const;
  bool operator==(const Coweight&) const = default;

  friend Coweight operator-(const Coweight& x, const Coweight& y);
};

// Newton cocharacter of a symmetric polygon: slopes listed descending with
// multiplicity = height, first h entries, c = 1.  Raises NotSymmetric /
// EmptyPolygon.
Coweight newton_vector(const NewtonPolygon& np);

// mu = (1,...,1; 1), the minuscule cocharacter fixed by the moduli problem.
Coweight mu_minuscule(int h);

// <2rho, x> = sum_k (2(h-k)+2) (a_k - c/2)
Rat pair_two_rho(const Coweight& x);
inline Rat pair_rho(const Coweight& x) { return pair_two_rho(x) / 2; }

// <omega_i, x> = sum_{k<=i} (a_k - c/2), 1 <= i <= h (IndexOutOfRange else)
Rat pair_omega(int i, const Coweight& x);

// image of x in the fundamental group (identified with Z via the multiplier)
Rat pi1_image(const Coweight& x);

}  // namespace rz
