#include "rz/wittring.hpp"

#include <algorithm>
#include <sstream>

namespace rz {

namespace {

constexpr uint64_t kTeichCacheLimit = 4096;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) { return (a + b) % m; }

struct PreferredModulus {
  long long p;
  int r;
  std::vector<uint64_t> low;
};

// Conway-polynomial lifts for the small fields exercised here; anything
// else falls back to a deterministic search.
const PreferredModulus kPreferred[] = {
    {3, 1, {1}},           // x + 1
    {3, 2, {2, 2}},        // x^2 + 2x + 2
    {3, 3, {1, 2, 0}},     // x^3 + 2x + 1
    {3, 4, {2, 0, 0, 2}},  // x^4 + 2x^3 + 2
    {5, 1, {3}},           // x + 3
    {5, 2, {2, 4}},        // x^2 + 4x + 2
    {7, 1, {4}},           // x + 4
    {7, 2, {3, 6}},        // x^2 + 6x + 3
};

std::vector<uint64_t> preferred_modulus(long long p, int r) {
  for (const auto& e : kPreferred)
    if (e.p == p && e.r == r && Fq::irreducible(p, e.low)) return e.low;
  return Fq::make(p, r).modulus_low();
}

}  // namespace

WittRing::WittRing(long long p, int r, int n)
    : p_(p), r_(r), n_(n), fq_(p, r, preferred_modulus(p, r)),
      mod_(fq_.modulus_low()) {
  init();
}

WittRing::WittRing(long long p, int r, int n, std::vector<uint64_t> modulus_low)
    : p_(p), r_(r), n_(n), fq_(p, r, modulus_low), mod_(std::move(modulus_low)) {
  init();
}

void WittRing::init() {
  if (p_ == 2) throw BadModulus("even characteristic not supported");
  if (n_ < 1) throw BadModulus("precision must be positive");
  pk_.assign(static_cast<size_t>(n_) + 1, 1);
  for (int k = 1; k <= n_; ++k) {
    if (pk_[k - 1] > (uint64_t(1) << 62) / static_cast<uint64_t>(p_))
      throw Overflow("ring too large");
    pk_[k] = pk_[k - 1] * static_cast<uint64_t>(p_);
  }
  for (auto& c : mod_) c %= pk_[n_];

  if (fq_.q() <= kTeichCacheLimit) {
    uint64_t q = fq_.q();
    teich_.assign(q * static_cast<uint64_t>(r_), 0);
    frob_.resize(q);
    frob_inv_.resize(q);
    for (uint64_t i = 0; i < q; ++i) {
      Fq::Elt d = fq_.element(i);
      teich_raw(&teich_[i * r_], d, n_);
      frob_[i] = static_cast<uint32_t>(fq_.index(fq_.frobenius(d)));
    }
    for (uint64_t i = 0; i < q; ++i) frob_inv_[frob_[i]] = static_cast<uint32_t>(i);
    cached_ = true;
  }
}

uint64_t WittRing::p_pow(int k) const {
  if (k < 0 || k > n_) throw IndexOutOfRange("power outside precision range");
  return pk_[k];
}

bool WittRing::same(const WittRing& o) const {
  return this == &o ||
         (p_ == o.p_ && r_ == o.r_ && n_ == o.n_ && mod_ == o.mod_);
}

std::string WittRing::str() const {
  std::ostringstream os;
  os << "W_" << n_ << "(F_" << fq_.q() << ")";
  return os.str();
}

void WittRing::zero(uint64_t* out) const { std::fill(out, out + r_, 0); }

void WittRing::one(uint64_t* out) const {
  zero(out);
  out[0] = 1;
}

void WittRing::from_int(uint64_t* out, long long v, int s) const {
  zero(out);
  long long m = static_cast<long long>(pk_[s]);
  out[0] = static_cast<uint64_t>(((v % m) + m) % m);
}

void WittRing::copy(uint64_t* out, const uint64_t* a) const {
  std::copy(a, a + r_, out);
}

void WittRing::reduce(uint64_t* a, int s) const {
  for (int i = 0; i < r_; ++i) a[i] %= pk_[s];
}

void WittRing::add(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const {
  uint64_t m = pk_[s];
  for (int i = 0; i < r_; ++i) out[i] = addmod(a[i] % m, b[i] % m, m);
}

void WittRing::sub(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const {
  uint64_t m = pk_[s];
  for (int i = 0; i < r_; ++i) out[i] = addmod(a[i] % m, m - b[i] % m, m);
}

void WittRing::neg(uint64_t* out, const uint64_t* a, int s) const {
  uint64_t m = pk_[s];
  for (int i = 0; i < r_; ++i) out[i] = (m - a[i] % m) % m;
}

void WittRing::mul(uint64_t* out, const uint64_t* a, const uint64_t* b, int s) const {
  uint64_t m = pk_[s];
  std::vector<uint64_t> conv(static_cast<size_t>(2 * r_ - 1), 0);
  for (int i = 0; i < r_; ++i) {
    uint64_t ai = a[i] % m;
    if (ai == 0) continue;
    for (int j = 0; j < r_; ++j)
      conv[i + j] = addmod(conv[i + j], mulmod(ai, b[j] % m, m), m);
  }
  // reduce by the monic modulus: x^r = -sum mod_[j] x^j
  for (int k = 2 * r_ - 2; k >= r_; --k) {
    uint64_t t = conv[k];
    if (t == 0) continue;
    conv[k] = 0;
    for (int j = 0; j < r_; ++j) {
      uint64_t s2 = (m - mod_[j] % m) % m;
      conv[k - r_ + j] = addmod(conv[k - r_ + j], mulmod(t, s2, m), m);
    }
  }
  for (int i = 0; i < r_; ++i) out[i] = conv[i];
}

void WittRing::scal_int(uint64_t* out, long long c, const uint64_t* a, int s) const {
  uint64_t m = pk_[s];
  long long mm = static_cast<long long>(m);
  uint64_t cu = static_cast<uint64_t>(((c % mm) + mm) % mm);
  for (int i = 0; i < r_; ++i) out[i] = mulmod(cu, a[i] % m, m);
}

void WittRing::pow_u(uint64_t* out, const uint64_t* a, uint64_t e, int s) const {
  std::vector<uint64_t> base(a, a + r_), acc(static_cast<size_t>(r_));
  one(acc.data());
  reduce(base.data(), s);
  while (e) {
    if (e & 1) mul(acc.data(), acc.data(), base.data(), s);
    mul(base.data(), base.data(), base.data(), s);
    e >>= 1;
  }
  copy(out, acc.data());
}

bool WittRing::is_zero(const uint64_t* a, int s) const {
  uint64_t m = pk_[s];
  for (int i = 0; i < r_; ++i)
    if (a[i] % m != 0) return false;
  return true;
}

bool WittRing::eq(const uint64_t* a, const uint64_t* b, int s) const {
  uint64_t m = pk_[s];
  for (int i = 0; i < r_; ++i)
    if (a[i] % m != b[i] % m) return false;
  return true;
}

int WittRing::val(const uint64_t* a, int s) const {
  int best = s;
  for (int i = 0; i < r_; ++i) {
    uint64_t x = a[i] % pk_[s];
    if (x == 0) continue;
    int v = 0;
    while (x % static_cast<uint64_t>(p_) == 0) {
      x /= static_cast<uint64_t>(p_);
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

void WittRing::unit_inv(uint64_t* out, const uint64_t* a, int s) const {
  Fq::Elt d = residue(a);
  Fq::Elt dinv = fq_.inv(d);  // NotAUnit on zero residue
  std::vector<uint64_t> y(dinv), t(static_cast<size_t>(r_)), two(static_cast<size_t>(r_));
  y.resize(static_cast<size_t>(r_), 0);
  from_int(two.data(), 2, s);
  // Newton: y <- y(2 - a y); correct digits double each round
  for (int k = 1; k < s; k *= 2) {
    mul(t.data(), a, y.data(), s);
    sub(t.data(), two.data(), t.data(), s);
    mul(y.data(), y.data(), t.data(), s);
  }
  copy(out, y.data());
  reduce(out, s);
}

void WittRing::div_pk(uint64_t* out, const uint64_t* a, int k, int s_in) const {
  if (k < 0 || k > s_in) throw PrecisionExhausted("division exceeds precision");
  uint64_t m = pk_[s_in];
  uint64_t d = pk_[k];
  for (int i = 0; i < r_; ++i) {
    uint64_t x = a[i] % m;
    if (x % d != 0) throw PrecisionExhausted("inexact division by p^k");
    out[i] = x / d;
  }
}

Fq::Elt WittRing::residue(const uint64_t* a) const {
  Fq::Elt d(static_cast<size_t>(r_));
  for (int i = 0; i < r_; ++i) d[i] = a[i] % static_cast<uint64_t>(p_);
  return d;
}

void WittRing::teich_raw(uint64_t* out, const Fq::Elt& d, int s) const {
  std::vector<uint64_t> y(d);
  y.resize(static_cast<size_t>(r_), 0);
  // y ≡ teich(d) mod p^k implies y^q ≡ teich(d) mod p^{k+1}
  for (int it = 1; it < s; ++it) pow_u(y.data(), y.data(), fq_.q(), s);
  copy(out, y.data());
  reduce(out, s);
}

const uint64_t* WittRing::cached_teich(uint64_t index) const {
  return cached_ ? &teich_[index * static_cast<uint64_t>(r_)] : nullptr;
}

void WittRing::teichmueller(uint64_t* out, const Fq::Elt& d, int s) const {
  if (static_cast<int>(d.size()) != r_) throw RingMismatch("residue size mismatch");
  if (const uint64_t* t = cached_teich(fq_.index(d))) {
    copy(out, t);
    reduce(out, s);
    return;
  }
  teich_raw(out, d, s);
}

std::vector<Fq::Elt> WittRing::digits(const uint64_t* a, int s) const {
  std::vector<Fq::Elt> ds;
  ds.reserve(static_cast<size_t>(s));
  std::vector<uint64_t> work(a, a + r_), t(static_cast<size_t>(r_));
  reduce(work.data(), s);
  for (int i = 0; i < s; ++i) {
    int prec = s - i;
    Fq::Elt d = residue(work.data());
    ds.push_back(d);
    if (!fq_.is_zero(d)) {
      teichmueller(t.data(), d, prec);
      sub(work.data(), work.data(), t.data(), prec);
    }
    div_pk(work.data(), work.data(), 1, prec);
  }
  return ds;
}

void WittRing::from_digits(uint64_t* out, const std::vector<Fq::Elt>& ds, int s) const {
  std::vector<uint64_t> acc(static_cast<size_t>(r_), 0), t(static_cast<size_t>(r_));
  int top = std::min<int>(s, static_cast<int>(ds.size()));
  for (int i = 0; i < top; ++i) {
    if (fq_.is_zero(ds[i])) continue;
    teichmueller(t.data(), ds[i], s);
    scal_int(t.data(), static_cast<long long>(pk_[i]), t.data(), s);
    add(acc.data(), acc.data(), t.data(), s);
  }
  copy(out, acc.data());
}

void WittRing::apply_frob_digits(uint64_t* out, const uint64_t* a, int s,
                                 bool inverse) const {
  std::vector<Fq::Elt> ds = digits(a, s);
  for (auto& d : ds) {
    if (cached_) {
      uint64_t idx = fq_.index(d);
      d = fq_.element(inverse ? frob_inv_[idx] : frob_[idx]);
    } else if (inverse) {
      // frobenius has order r on F_q, so its inverse is the (r-1)-st power
      for (int t = 0; t < r_ - 1; ++t) d = fq_.frobenius(d);
    } else {
      d = fq_.frobenius(d);
    }
  }
  from_digits(out, ds, s);
}

void WittRing::sigma(uint64_t* out, const uint64_t* a, int s) const {
  apply_frob_digits(out, a, s, false);
}

void WittRing::sigma_inv(uint64_t* out, const uint64_t* a, int s) const {
  apply_frob_digits(out, a, s, true);
}

// ---------------------------------------------------------------- WittScalar

WittScalar::WittScalar(const WittRing& ring)
    : ring_(&ring), limbs_(static_cast<size_t>(ring.r()), 0) {}

WittScalar::WittScalar(const WittRing& ring, long long v) : WittScalar(ring) {
  ring.from_int(limbs_.data(), v, ring.n());
}

WittScalar WittScalar::from_limbs(const WittRing& ring, std::vector<uint64_t> limbs) {
  if (limbs.size() != static_cast<size_t>(ring.r()))
    throw RingMismatch("limb count mismatch");
  WittScalar x(ring);
  x.limbs_ = std::move(limbs);
  ring.reduce(x.limbs_.data(), ring.n());
  return x;
}

WittScalar WittScalar::teichmueller(const WittRing& ring, const Fq::Elt& d) {
  WittScalar x(ring);
  ring.teichmueller(x.limbs_.data(), d, ring.n());
  return x;
}

const WittRing& WittScalar::ring() const {
  if (!ring_) throw RingMismatch("uninitialized scalar");
  return *ring_;
}

const WittRing* WittScalar::check(const WittScalar& o) const {
  if (!ring_ || !o.ring_) throw RingMismatch("uninitialized scalar");
  if (!ring_->same(*o.ring_)) throw RingMismatch("scalars from different rings");
  return ring_;
}

WittScalar WittScalar::operator+(const WittScalar& o) const {
  const WittRing* R = check(o);
  WittScalar out(*R);
  R->add(out.limbs_.data(), limbs_.data(), o.limbs_.data(), R->n());
  return out;
}

WittScalar WittScalar::operator-(const WittScalar& o) const {
  const WittRing* R = check(o);
  WittScalar out(*R);
  R->sub(out.limbs_.data(), limbs_.data(), o.limbs_.data(), R->n());
  return out;
}

WittScalar WittScalar::operator*(const WittScalar& o) const {
  const WittRing* R = check(o);
  WittScalar out(*R);
  R->mul(out.limbs_.data(), limbs_.data(), o.limbs_.data(), R->n());
  return out;
}

WittScalar WittScalar::operator-() const {
  const WittRing& R = ring();
  WittScalar out(R);
  R.neg(out.limbs_.data(), limbs_.data(), R.n());
  return out;
}

bool WittScalar::operator==(const WittScalar& o) const {
  const WittRing* R = check(o);
  return R->eq(limbs_.data(), o.limbs_.data(), R->n());
}

bool WittScalar::is_zero() const { return ring().is_zero(limbs_.data(), ring().n()); }

bool WittScalar::is_unit() const { return valuation() == 0; }

int WittScalar::valuation() const { return ring().val(limbs_.data(), ring().n()); }

WittScalar WittScalar::inverse() const {
  const WittRing& R = ring();
  WittScalar out(R);
  R.unit_inv(out.limbs_.data(), limbs_.data(), R.n());
  return out;
}

WittScalar WittScalar::sigma() const {
  const WittRing& R = ring();
  WittScalar out(R);
  R.sigma(out.limbs_.data(), limbs_.data(), R.n());
  return out;
}

WittScalar WittScalar::sigma_inv() const {
  const WittRing& R = ring();
  WittScalar out(R);
  R.sigma_inv(out.limbs_.data(), limbs_.data(), R.n());
  return out;
}

std::vector<Fq::Elt> WittScalar::digits() const {
  return ring().digits(limbs_.data(), ring().n());
}

std::string WittScalar::str() const {
  const WittRing& R = ring();
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < R.r(); ++i) {
    if (i) os << ",";
    os << limbs_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace rz
