#include <random>

#include "doctest.h"
#include "rz/wittring.hpp"

using namespace rz;

TEST_CASE("prime-field arithmetic matches integers mod p^n") {
  WittRing R(3, 1, 2);  // Z/9
  WittScalar a(R, 8), b(R, 8);
  CHECK((a + b).limbs()[0] == 7);
  CHECK((a * b).limbs()[0] == 1);
  CHECK((a - b).is_zero());
  CHECK((-a).limbs()[0] == 1);
  WittScalar four(R, 4);
  CHECK(four.inverse().limbs()[0] == 7);  // 4*7 = 28 = 1 mod 9
  CHECK((four * four.inverse()) == WittScalar(R, 1));
  CHECK_THROWS_AS(WittScalar(R, 3).inverse(), NotAUnit);
  CHECK_THROWS_AS(WittScalar(R, 0).inverse(), NotAUnit);
}

TEST_CASE("teichmueller lifts in Z/9") {
  WittRing R(3, 1, 2);
  WittScalar t2 = WittScalar::teichmueller(R, R.residue_field().from_int(2));
  CHECK(t2.limbs()[0] == 8);  // 8^3 = 512 = 8 mod 9
  WittScalar t1 = WittScalar::teichmueller(R, R.residue_field().from_int(1));
  CHECK(t1.limbs()[0] == 1);
  WittScalar t0 = WittScalar::teichmueller(R, R.residue_field().from_int(0));
  CHECK(t0.is_zero());
}

TEST_CASE("teichmueller is the q-power fixpoint") {
  WittRing R(3, 2, 4);
  const Fq& k = R.residue_field();
  for (uint64_t i = 0; i < k.q(); ++i) {
    WittScalar t = WittScalar::teichmueller(R, k.element(i));
    std::vector<uint64_t> pw(static_cast<size_t>(R.r()));
    R.pow_u(pw.data(), t.limbs().data(), k.q(), R.n());
    CHECK(R.eq(pw.data(), t.limbs().data(), R.n()));
    CHECK(k.eq(R.residue(t.limbs().data()), k.element(i)));
  }
}

TEST_CASE("teichmueller is multiplicative, exhaustively") {
  for (int r : {2, 3}) {
    WittRing R(3, r, 3);
    const Fq& k = R.residue_field();
    for (uint64_t i = 0; i < k.q(); ++i)
      for (uint64_t j = 0; j < k.q(); ++j) {
        WittScalar ti = WittScalar::teichmueller(R, k.element(i));
        WittScalar tj = WittScalar::teichmueller(R, k.element(j));
        WittScalar tij = WittScalar::teichmueller(R, k.mul(k.element(i), k.element(j)));
        CHECK((ti * tj) == tij);
      }
  }
}

TEST_CASE("ring axioms on random triples") {
  struct Cfg { long long p; int r, n; };
  for (Cfg c : {Cfg{3, 1, 4}, Cfg{3, 2, 4}, Cfg{5, 1, 3}, Cfg{3, 3, 3}}) {
    WittRing R(c.p, c.r, c.n);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(c.n) - 1);
    auto rand_scalar = [&] {
      std::vector<uint64_t> limbs(static_cast<size_t>(c.r));
      for (auto& x : limbs) x = dist(rng);
      return WittScalar::from_limbs(R, std::move(limbs));
    };
    for (int t = 0; t < 200; ++t) {
      WittScalar a = rand_scalar(), b = rand_scalar(), cc = rand_scalar();
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      CHECK(((a + b) + cc) == (a + (b + cc)));
      CHECK(((a * b) * cc) == (a * (b * cc)));
      CHECK((a * (b + cc)) == (a * b + a * cc));
      CHECK((a + WittScalar(R)) == a);
      CHECK((a * WittScalar(R, 1)) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("frobenius is identity for prime residue field") {
  WittRing R(3, 1, 4);
  for (uint64_t v = 0; v < 81; ++v) {
    WittScalar a = WittScalar::from_limbs(R, {v});
    CHECK(a.sigma() == a);
  }
}

TEST_CASE("frobenius squares to identity on W_2(F_9)") {
  WittRing R(3, 2, 2);
  for (uint64_t x = 0; x < 9; ++x)
    for (uint64_t y = 0; y < 9; ++y) {
      WittScalar a = WittScalar::from_limbs(R, {x, y});
      CHECK(a.sigma().sigma() == a);
      CHECK(a.sigma().sigma_inv() == a);
      CHECK(a.sigma_inv().sigma() == a);
    }
}

TEST_CASE("frobenius is a ring homomorphism congruent to p-th power") {
  WittRing R(3, 2, 3);
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(3) - 1);
  for (int t = 0; t < 300; ++t) {
    WittScalar a = WittScalar::from_limbs(R, {dist(rng), dist(rng)});
    WittScalar b = WittScalar::from_limbs(R, {dist(rng), dist(rng)});
    CHECK((a + b).sigma() == a.sigma() + b.sigma());
    CHECK((a * b).sigma() == a.sigma() * b.sigma());
    // sigma(a) = a^p mod p
    WittScalar ap = a * a * a;
    const Fq& k = R.residue_field();
    CHECK(k.eq(R.residue(a.sigma().limbs().data()), R.residue(ap.limbs().data())));
  }
}

TEST_CASE("frobenius fixes teichmueller lifts compatibly") {
  WittRing R(3, 2, 3);
  const Fq& k = R.residue_field();
  for (uint64_t i = 0; i < k.q(); ++i) {
    WittScalar t = WittScalar::teichmueller(R, k.element(i));
    CHECK(t.sigma() == WittScalar::teichmueller(R, k.frobenius(k.element(i))));
  }
}

TEST_CASE("valuation is additive when determined") {
  WittRing R(3, 2, 4);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(4) - 1);
  for (int t = 0; t < 500; ++t) {
    WittScalar a = WittScalar::from_limbs(R, {dist(rng), dist(rng)});
    WittScalar b = WittScalar::from_limbs(R, {dist(rng), dist(rng)});
    if (a.valuation() + b.valuation() < R.n())
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
  }
  CHECK(WittScalar(R).valuation() == 4);
  CHECK(WittScalar(R, 9).valuation() == 2);
  CHECK(WittScalar(R, 1).valuation() == 0);
}

TEST_CASE("digit expansion round-trips") {
  WittRing R(3, 2, 4);
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(4) - 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<uint64_t> limbs{dist(rng), dist(rng)};
    WittScalar a = WittScalar::from_limbs(R, limbs);
    std::vector<Fq::Elt> ds = a.digits();
    REQUIRE(ds.size() == 4);
    std::vector<uint64_t> back(2);
    R.from_digits(back.data(), ds, R.n());
    CHECK(R.eq(back.data(), a.limbs().data(), R.n()));
  }
}

TEST_CASE("precision-parametric ops agree with truncation") {
  WittRing R(3, 2, 5);
  WittRing T(3, 2, 2);
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(5) - 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<uint64_t> a{dist(rng), dist(rng)}, b{dist(rng), dist(rng)};
    std::vector<uint64_t> big(2), small(2);
    std::vector<uint64_t> at{a[0] % 9, a[1] % 9}, bt{b[0] % 9, b[1] % 9};
    R.mul(big.data(), a.data(), b.data(), 2);
    T.mul(small.data(), at.data(), bt.data(), 2);
    CHECK(big == small);
    R.sigma(big.data(), a.data(), 2);
    T.sigma(small.data(), at.data(), 2);
    CHECK(big == small);
  }
}

TEST_CASE("exact division by p^k") {
  WittRing R(3, 2, 4);
  WittScalar nine(R, 9);
  std::vector<uint64_t> out(2);
  R.div_pk(out.data(), nine.limbs().data(), 2, 4);
  CHECK(out[0] == 1);
  CHECK(out[1] == 0);
  WittScalar one(R, 1);
  CHECK_THROWS_AS(R.div_pk(out.data(), one.limbs().data(), 1, 4), PrecisionExhausted);
  CHECK_THROWS_AS(R.div_pk(out.data(), one.limbs().data(), 5, 4), PrecisionExhausted);
}

TEST_CASE("unit inverse at reduced precision") {
  WittRing R(3, 2, 6);
  std::mt19937_64 rng(2020);
  std::uniform_int_distribution<uint64_t> dist(0, R.p_pow(6) - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<uint64_t> a{dist(rng), dist(rng)};
    for (int s : {1, 2, 3, 6}) {
      if (R.val(a.data(), s) != 0) continue;
      std::vector<uint64_t> inv(2), prod(2), one(2);
      R.unit_inv(inv.data(), a.data(), s);
      R.mul(prod.data(), a.data(), inv.data(), s);
      R.one(one.data());
      CHECK(R.eq(prod.data(), one.data(), s));
    }
  }
}

TEST_CASE("ring mismatch is loud") {
  WittRing R(3, 1, 2), S(3, 1, 3), S2(5, 1, 2);
  WittScalar a(R, 1), b(S, 1), c(S2, 1);
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * c, RingMismatch);
  CHECK_THROWS_AS(WittScalar() + a, RingMismatch);
  // same parameters, distinct instances: compatible
  WittRing R2(3, 1, 2);
  WittScalar d(R2, 5);
  CHECK((a + d).limbs()[0] == 6);
}

TEST_CASE("ring construction guards") {
  CHECK_THROWS_AS(WittRing(2, 1, 3), BadModulus);
  CHECK_THROWS_AS(WittRing(4, 1, 3), BadModulus);
  CHECK_THROWS_AS(WittRing(3, 2, 0), BadModulus);
  CHECK_THROWS_AS(WittRing(3, 2, 4, {0, 0}), BadModulus);  // x^2 reducible
  CHECK_THROWS_AS(WittRing(3, 1, 60), Overflow);
  // explicit irreducible modulus accepted
  WittRing R(3, 2, 2, {2, 2});
  CHECK(R.str() == "W_2(F_9)");
  CHECK(R.p_pow(2) == 9);
}

TEST_CASE("preferred moduli are irreducible and stable") {
  for (auto [p, r] : {std::pair<long long, int>{3, 1}, {3, 2}, {3, 3}, {3, 4},
                      {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 2}}) {
    WittRing R(p, r, 2);
    CHECK(Fq::irreducible(p, R.modulus_low()));
    WittRing R2(p, r, 2);
    CHECK(R.modulus_low() == R2.modulus_low());
  }
}
