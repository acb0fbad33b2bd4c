#include "doctest.h"
#include "rz/rootdata.hpp"

using namespace rz;

TEST_CASE("newton_vector of standard polygons") {
  Coweight nu = newton_vector(parse_newton("1:1,1:1"));
  REQUIRE(nu.rank() == 2);
  CHECK(nu.a[0] == Rat(1, 2));
  CHECK(nu.a[1] == Rat(1, 2));
  CHECK(nu.c == Rat(1));
  CHECK(nu.is_dominant());

  nu = newton_vector(parse_newton("1:2,2:1"));
  REQUIRE(nu.rank() == 3);
  for (auto& x : nu.a) CHECK(x == Rat(2, 3));

  nu = newton_vector(parse_newton("0:1,1:1,1:0"));
  REQUIRE(nu.rank() == 2);
  CHECK(nu.a[0] == Rat(1));
  CHECK(nu.a[1] == Rat(1, 2));

  CHECK_THROWS_AS(newton_vector(parse_newton("1:2")), NotSymmetric);
}

TEST_CASE("mu_minuscule and full vector") {
  Coweight mu = mu_minuscule(2);
  CHECK(mu.a == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(mu.c == Rat(1));
  CHECK(mu.is_dominant());
  CHECK(mu.full_vector() == std::vector<Rat>{Rat(1), Rat(1), Rat(0), Rat(0)});
  CHECK(pi1_image(mu) == Rat(1));
  CHECK(mu_minuscule(1).a == std::vector<Rat>{Rat(1)});
}

TEST_CASE("weight pairings, hand values") {
  NewtonPolygon np = parse_newton("1:1,1:1");
  Coweight nu = newton_vector(np);
  Coweight mu = mu_minuscule(2);
  CHECK(pair_two_rho(mu - nu) == Rat(3));
  CHECK(pair_omega(2, nu - mu) == Rat(-1));
  CHECK(pair_omega(1, nu - mu) == Rat(-1, 2));
  CHECK_THROWS_AS(pair_omega(0, mu), IndexOutOfRange);
  CHECK_THROWS_AS(pair_omega(3, mu), IndexOutOfRange);
}

TEST_CASE("weights kill the center") {
  // central coweight (t,...,t; 2t)
  Coweight z;
  z.a = {Rat(5, 3), Rat(5, 3), Rat(5, 3)};
  z.c = Rat(10, 3);
  CHECK(pair_two_rho(z) == Rat(0));
  CHECK(pair_rho(z) == Rat(0));
  for (int i = 1; i <= 3; ++i) CHECK(pair_omega(i, z) == Rat(0));
  CHECK(pi1_image(z) == Rat(10, 3));
}

TEST_CASE("pi1_image reads the multiplier") {
  Coweight x;
  x.a = {Rat(2), Rat(0)};
  x.c = Rat(2);
  CHECK(pi1_image(x) == Rat(2));
  Coweight zero;
  zero.a = {Rat(0)};
  zero.c = Rat(0);
  CHECK(pi1_image(zero) == Rat(0));
}

TEST_CASE("pairing properties across the enumeration") {
  for (int h = 1; h <= 7; ++h)
    for (const NewtonPolygon& np : enumerate_symmetric(h)) {
      Coweight nu = newton_vector(np);
      CHECK(nu.is_dominant());
      for (auto& ak : nu.a) {
        CHECK(ak >= Rat(1, 2));
        CHECK(ak <= Rat(1));
      }
      Coweight mu = mu_minuscule(h);
      Coweight d = mu - nu;
      CHECK(pi1_image(d) == Rat(0));
      CHECK(pair_two_rho(d) == Rat(2) * pair_rho(d));
      for (int i = 1; i <= h; ++i) CHECK(pair_omega(i, d) >= Rat(0));
    }
}
