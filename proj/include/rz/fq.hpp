#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rz/errors.hpp"

namespace rz {

// Arithmetic in F_q = F_p[x]/(f), f monic irreducible of degree r.
// Elements are little-endian coefficient vectors of length r with entries
// in [0, p).  Sized for small fields (q up to a few thousand); everything
// here is exact.
class Fq {
 public:
  using Elt = std::vector<uint64_t>;

  // modulus_low: the r lower coefficients c_0..c_{r-1} of the monic modulus
  // x^r + c_{r-1}x^{r-1} + ... + c_0.  Verified irreducible over F_p.
  Fq(long long p, int r, std::vector<uint64_t> modulus_low);

  // First irreducible monic modulus in index order (coefficient vectors
  // read as base-p numerals).
  static Fq make(long long p, int r);

  long long p() const { return p_; }
  int r() const { return r_; }
  uint64_t q() const { return q_; }
  const std::vector<uint64_t>& modulus_low() const { return mod_; }

  Elt zero() const { return Elt(static_cast<size_t>(r_), 0); }
  Elt one() const;
  Elt from_int(long long v) const;
  Elt x() const;  // the class of the variable (r >= 2), else throws

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt base, uint64_t e) const;
  Elt inv(const Elt& a) const;  // NotAUnit on zero
  Elt frobenius(const Elt& a) const { return pow(a, static_cast<uint64_t>(p_)); }

  bool is_zero(const Elt& a) const;
  bool eq(const Elt& a, const Elt& b) const;

  // element(k): coefficients are the base-p digits of k; index inverts it.
  Elt element(uint64_t index) const;
  uint64_t index(const Elt& a) const;

  std::string str(const Elt& a) const;

  // Is the monic polynomial with these low coefficients irreducible over F_p?
  // Trial division by all monic divisors of degree <= deg/2.
  static bool irreducible(long long p, const std::vector<uint64_t>& low);

 private:
  long long p_;
  int r_;
  uint64_t q_;
  std::vector<uint64_t> mod_;
};

}  // namespace rz
