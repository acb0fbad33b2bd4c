#pragma once
// Exact rational arithmetic on 64-bit components.  All slope / pairing /
// dimension computations in this project stay exact; doubles appear only in
// serialization as convenience copies.  Magnitudes are tiny (heights <= ~24),
// but every product goes through __int128 and overflow raises instead of
// wrapping.

#include <cstdint>
#include <numeric>
#include <string>

#include "rz/errors.hpp"

namespace rz {

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rat(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw ParseError("rational with zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // floor(num/den) for either sign
  long long floor() const {
    long long q = num_ / den_, r = num_ % den_;
    return (r != 0 && num_ < 0) ? q - 1 : q;
  }
  long long ceil() const { return -(-*this).floor(); }

  Rat operator-() const { return Rat(-num_, den_, already_normal{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from128(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw ParseError("rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // "p/q" (or "p" when integral); the exact form used in JSON output
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const { return double(num_) / double(den_); }

  static Rat parse(const std::string& s);

 private:
  using i128 = __int128;
  struct already_normal {};
  Rat(long long n, long long d, already_normal) : num_(n), den_(d) {}

  static Rat from128(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw Overflow("rational out of 64-bit range");
    return Rat((long long)n, (long long)d, already_normal{});
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_, den_;
};

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash))
      throw ParseError("trailing junk in rational '" + s + "'");
    if (slash == std::string::npos) return Rat(n);
    long long d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1)
      throw ParseError("trailing junk in rational '" + s + "'");
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Overflow("rational literal out of range '" + s + "'");
  }
}

}  // namespace rz
