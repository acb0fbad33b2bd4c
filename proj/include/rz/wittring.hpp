#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rz/errors.hpp"
#include "rz/fq.hpp"

namespace rz {

// Truncated Witt vectors W_n(F_{p^r}) realized as the unramified quotient
// Z[x]/(p^n, f(x)) with f monic of degree r and irreducible mod p.  For a
// perfect residue field the two constructions are isomorphic, and this one
// makes multiplication a polynomial product and Frobenius computable through
// Teichmueller digits.
//
// Elements are little-endian limb vectors of length r, entries in [0, p^n).
//
// Every raw operation takes an explicit working precision s (0 <= s <= n)
// and reads/writes its arguments mod p^s.  Lattice code uses this to run
// width-s window arithmetic inside a ring that carries guard digits.
class WittRing {
 public:
  WittRing(long long p, int r, int n);  // preferred modulus (Conway lift when tabulated)
  WittRing(long long p, int r, int n, std::vector<uint64_t> modulus_low);

  WittRing(const WittRing&) = delete;
  WittRing& operator=(const WittRing&) = delete;

  long long p() const { return p_; }
  int r() const { return r_; }
  int n() const { return n_; }
  uint64_t p_pow(int k) const;  // p^k for 0 <= k <= n
  const Fq& residue_field() const { return fq_; }
  const std::vector<uint64_t>& modulus_low() const { return mod_; }
  bool same(const WittRing& o) const;
  std::string str() const;  // e.g. "W_4(F_9)"

  // ---- raw limb operations; all arrays have length r ----
  void zero(uint64_t* out) const;
  void one(uint64_t* out) const;
  void from_int(uint64_t* out, long long v, int s) const;
  void copy(uint64_t* out, const uint64_t* a) const;
  void reduce(uint64_t* a, int s) const;  // in place, mod p^s
  void add(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const;
  void sub(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const;
  void neg(uint64_t* out, const uint64_t* a, int s) const;
  void mul(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const;
  void scal_int(uint64_t* out, long long c, const uint64_t* a, int s) const;
  void pow_u(uint64_t* out, const uint64_t* a, uint64_t e, int s) const;
  bool is_zero(const uint64_t* a, int s) const;
  bool eq(const uint64_t* a, const uint64_t* b, int s) const;

  // p-adic valuation as seen at precision s: a value in [0, s], where s
  // means "zero mod p^s" (indistinguishable from zero at this precision).
  int val(const uint64_t* a, int s) const;

  // inverse of a unit (val == 0), by residue-field inversion + Hensel lifting
  void unit_inv(uint64_t* out, const uint64_t* a, int s) const;  // NotAUnit

  // exact division by p^k: every limb of a (read mod p^s_in) must be
  // divisible by p^k, else PrecisionExhausted; out is valid mod p^{s_in-k}
  void div_pk(uint64_t* out, const uint64_t* a, int k, int s_in) const;

  Fq::Elt residue(const uint64_t* a) const;  // limbs mod p

  // the unique lift t of d with t^q = t (q = p^r), at precision s
  void teichmueller(uint64_t* out, const Fq::Elt& d, int s) const;

  // Teichmueller digit expansion a = sum_{i<s} teich(d_i) p^i
  std::vector<Fq::Elt> digits(const uint64_t* a, int s) const;
  void from_digits(uint64_t* out, const std::vector<Fq::Elt>& ds, int s) const;

  // Frobenius sigma (digit-wise p-power) and its inverse; ring automorphisms
  void sigma(uint64_t* out, const uint64_t* a, int s) const;
  void sigma_inv(uint64_t* out, const uint64_t* a, int s) const;

 private:
  void init();
  void teich_raw(uint64_t* out, const Fq::Elt& d, int s) const;
  const uint64_t* cached_teich(uint64_t index) const;  // nullptr if not cached
  void apply_frob_digits(uint64_t* out, const uint64_t* a, int s, bool inverse) const;

  long long p_;
  int r_;
  int n_;
  Fq fq_;
  std::vector<uint64_t> mod_;     // low coefficients mod p^n
  std::vector<uint64_t> pk_;      // p^0..p^n
  std::vector<uint64_t> teich_;   // q*r limbs at precision n (when cached)
  std::vector<uint32_t> frob_;    // index permutation d -> d^p (when cached)
  std::vector<uint32_t> frob_inv_;
  bool cached_ = false;
};

// Immutable scalar bound to a ring, always at full precision n.
class WittScalar {
 public:
  WittScalar() : ring_(nullptr) {}
  explicit WittScalar(const WittRing& ring);  // zero
  WittScalar(const WittRing& ring, long long v);
  static WittScalar from_limbs(const WittRing& ring, std::vector<uint64_t> limbs);
  static WittScalar teichmueller(const WittRing& ring, const Fq::Elt& d);

  const WittRing& ring() const;
  const std::vector<uint64_t>& limbs() const { return limbs_; }

  WittScalar operator+(const WittScalar& o) const;
  WittScalar operator-(const WittScalar& o) const;
  WittScalar operator*(const WittScalar& o) const;
  WittScalar operator-() const;
  bool operator==(const WittScalar& o) const;
  bool operator!=(const WittScalar& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_unit() const;
  int valuation() const;        // n when zero at full precision
  WittScalar inverse() const;   // NotAUnit
  WittScalar sigma() const;
  WittScalar sigma_inv() const;
  std::vector<Fq::Elt> digits() const;
  std::string str() const;

 private:
  const WittRing* check(const WittScalar& o) const;  // RingMismatch
  const WittRing* ring_;
  std::vector<uint64_t> limbs_;
};

}  // namespace rz
