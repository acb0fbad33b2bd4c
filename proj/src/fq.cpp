#include "rz/fq.hpp"

#include <algorithm>
#include <sstream>

namespace rz {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// remainder of a(x) modulo the monic polynomial with low coeffs g (degree
// g.size()), everything over F_p; a is little-endian, arbitrary length
std::vector<uint64_t> poly_mod(std::vector<uint64_t> a, const std::vector<uint64_t>& g,
                               long long p) {
  size_t d = g.size();
  while (a.size() > d) {
    uint64_t t = a.back();
    a.pop_back();
    if (t == 0) continue;
    size_t off = a.size() - d;
    for (size_t j = 0; j < d; ++j) {
      uint64_t s = static_cast<uint64_t>(p) - g[j] % p;  // -g[j] mod p
      a[off + j] = (a[off + j] + t * s) % p;
    }
  }
  return a;
}

}  // namespace

bool Fq::irreducible(long long p, const std::vector<uint64_t>& low) {
  size_t d = low.size();
  if (d == 0) return false;
  if (d == 1) return true;
  // constant term zero => divisible by x
  if (low[0] % p == 0) return false;
  for (size_t e = 1; 2 * e <= d; ++e) {
    uint64_t count = 1;
    for (size_t i = 0; i < e; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint64_t> g(e);
      uint64_t t = idx;
      for (size_t i = 0; i < e; ++i) {
        g[i] = t % p;
        t /= p;
      }
      std::vector<uint64_t> f(low);
      for (auto& c : f) c %= p;
      f.push_back(1);  // monic leading coefficient
      std::vector<uint64_t> rem = poly_mod(std::move(f), g, p);
      bool zero = std::all_of(rem.begin(), rem.end(), [](uint64_t c) { return c == 0; });
      if (zero) return false;
    }
  }
  return true;
}

Fq::Fq(long long p, int r, std::vector<uint64_t> modulus_low) : p_(p), r_(r) {
  if (!is_prime(p)) throw BadModulus("characteristic is not prime");
  if (r < 1) throw BadModulus("extension degree must be positive");
  if (static_cast<int>(modulus_low.size()) != r)
    throw BadModulus("modulus degree does not match extension degree");
  q_ = 1;
  for (int i = 0; i < r; ++i) {
    if (q_ > (uint64_t(1) << 62) / static_cast<uint64_t>(p)) throw Overflow("field too large");
    q_ *= static_cast<uint64_t>(p);
  }
  for (auto& c : modulus_low) c %= static_cast<uint64_t>(p);
  if (!irreducible(p, modulus_low)) throw BadModulus("modulus is reducible");
  mod_ = std::move(modulus_low);
}

Fq Fq::make(long long p, int r) {
  if (!is_prime(p)) throw BadModulus("characteristic is not prime");
  if (r < 1) throw BadModulus("extension degree must be positive");
  if (r == 1) return Fq(p, 1, {1});
  uint64_t count = 1;
  for (int i = 0; i < r; ++i) count *= static_cast<uint64_t>(p);
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<uint64_t> low(static_cast<size_t>(r));
    uint64_t t = idx;
    for (int i = 0; i < r; ++i) {
      low[static_cast<size_t>(i)] = t % static_cast<uint64_t>(p);
      t /= static_cast<uint64_t>(p);
    }
    if (irreducible(p, low)) return Fq(p, r, std::move(low));
  }
  throw BadModulus("no irreducible modulus found");  // unreachable
}

Fq::Elt Fq::one() const {
  Elt e = zero();
  e[0] = 1;
  return e;
}

Fq::Elt Fq::from_int(long long v) const {
  Elt e = zero();
  long long m = ((v % p_) + p_) % p_;
  e[0] = static_cast<uint64_t>(m);
  return e;
}

Fq::Elt Fq::x() const {
  if (r_ < 2) throw IndexOutOfRange("no variable class in a prime field");
  Elt e = zero();
  e[1] = 1;
  return e;
}

Fq::Elt Fq::add(const Elt& a, const Elt& b) const {
  Elt c = zero();
  for (int i = 0; i < r_; ++i) c[i] = (a[i] + b[i]) % static_cast<uint64_t>(p_);
  return c;
}

Fq::Elt Fq::sub(const Elt& a, const Elt& b) const {
  Elt c = zero();
  for (int i = 0; i < r_; ++i)
    c[i] = (a[i] + static_cast<uint64_t>(p_) - b[i] % static_cast<uint64_t>(p_)) %
           static_cast<uint64_t>(p_);
  return c;
}

Fq::Elt Fq::neg(const Elt& a) const { return sub(zero(), a); }

Fq::Elt Fq::mul(const Elt& a, const Elt& b) const {
  std::vector<uint64_t> conv(static_cast<size_t>(2 * r_ - 1), 0);
  for (int i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r_; ++j)
      conv[i + j] = (conv[i + j] + a[i] * b[j]) % static_cast<uint64_t>(p_);
  }
  std::vector<uint64_t> rem = poly_mod(std::move(conv), mod_, p_);
  rem.resize(static_cast<size_t>(r_), 0);
  return rem;
}

Fq::Elt Fq::pow(Elt base, uint64_t e) const {
  Elt acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Fq::Elt Fq::inv(const Elt& a) const {
  if (is_zero(a)) throw NotAUnit("zero has no inverse");
  return pow(a, q_ - 2);
}

bool Fq::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

bool Fq::eq(const Elt& a, const Elt& b) const {
  for (int i = 0; i < r_; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Fq::Elt Fq::element(uint64_t index) const {
  Elt e = zero();
  for (int i = 0; i < r_; ++i) {
    e[i] = index % static_cast<uint64_t>(p_);
    index /= static_cast<uint64_t>(p_);
  }
  return e;
}

uint64_t Fq::index(const Elt& a) const {
  uint64_t idx = 0;
  for (int i = r_ - 1; i >= 0; --i) idx = idx * static_cast<uint64_t>(p_) + a[i];
  return idx;
}

std::string Fq::str(const Elt& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << "]";
  return os.str();
}

}  // namespace rz
