#include <random>
#include <vector>

#include "doctest.h"
#include "rz/sigmalin.hpp"

using namespace rz;

namespace {

AdditivePoly poly(std::vector<Fq::Elt> coef) {
  AdditivePoly a;
  a.coef = std::move(coef);
  return ap_normalize(std::move(a));
}

bool poly_eq(const Fq& F, const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly d = ap_sub(F, a, b);
  return d.zero();
}

AdditivePoly random_poly(const Fq& F, std::mt19937& gen, int maxdeg, int linear_mode) {
  std::uniform_int_distribution<uint64_t> pick(0, F.q() - 1);
  std::uniform_int_distribution<int> degd(0, maxdeg);
  AdditivePoly a;
  a.coef.resize(static_cast<size_t>(degd(gen)) + 1, F.zero());
  for (auto& c : a.coef) c = F.element(pick(gen));
  if (linear_mode == 0) a.coef[0] = F.zero();
  if (linear_mode == 1)
    while (F.is_zero(a.coef[0])) a.coef[0] = F.element(pick(gen));
  return ap_normalize(std::move(a));
}

SigmaSystem random_system(const Fq& F, std::mt19937& gen, int eqs, int vars) {
  std::uniform_int_distribution<uint64_t> pick(0, F.q() - 1);
  SigmaSystem sys{F, {}, {}};
  sys.lhs.resize(static_cast<size_t>(eqs));
  for (int i = 0; i < eqs; ++i) {
    sys.lhs[i].resize(static_cast<size_t>(vars));
    for (int j = 0; j < vars; ++j)
      sys.lhs[i][j] = random_poly(F, gen, 2, j < i ? 0 : (j == i ? 1 : 2));
    sys.rhs.push_back(F.element(pick(gen)));
  }
  return sys;
}

void check_triangular(const SigmaSystem& sys) {
  for (int i = 0; i < sys.equations(); ++i) {
    for (int j = 0; j < i; ++j) CHECK(sys.lhs[i][j].zero());
    REQUIRE(!sys.lhs[i][i].coef.empty());
    CHECK(!sys.field.is_zero(sys.lhs[i][i].coef[0]));
  }
}

}  // namespace

TEST_CASE("additive polynomials are additive maps") {
  std::mt19937 gen(0x5e71u);
  for (int r : {1, 2, 3}) {
    Fq F = Fq::make(3, r);
    CAPTURE(r);
    for (int trial = 0; trial < 8; ++trial) {
      AdditivePoly P = random_poly(F, gen, 3, 2);
      for (uint64_t xi = 0; xi < F.q(); ++xi)
        for (uint64_t yi = 0; yi < F.q(); ++yi) {
          Fq::Elt x = F.element(xi), y = F.element(yi);
          Fq::Elt lhs = ap_eval(F, P, F.add(x, y));
          Fq::Elt rhs = F.add(ap_eval(F, P, x), ap_eval(F, P, y));
          if (!F.eq(lhs, rhs)) {
            CAPTURE(xi);
            CAPTURE(yi);
            REQUIRE(F.eq(lhs, rhs));
          }
        }
    }
  }
}

TEST_CASE("polynomial algebra basics") {
  Fq F = Fq::make(3, 2);
  AdditivePoly P = poly({F.one(), F.zero(), F.from_int(2)});
  CHECK(P.degree() == 2);
  CHECK(ap_twist(F, P, 1).degree() == 3);
  // twisting composes with Frobenius on evaluation
  for (uint64_t xi = 0; xi < F.q(); ++xi) {
    Fq::Elt x = F.element(xi);
    CHECK(F.eq(ap_eval(F, ap_twist(F, P, 1), x), F.frobenius(ap_eval(F, P, x))));
  }
  CHECK(ap_sub(F, P, P).zero());
  CHECK(ap_normalize(poly({F.zero(), F.zero()})).coef.empty());
  CHECK(poly({F.zero()}).degree() == -1);
}

TEST_CASE("two variable elimination worked example") {
  Fq F = Fq::make(3, 2);
  Fq::Elt u = F.x();  // any unit with u != 1 exercises the scaling
  Fq::Elt a0 = F.x(), a1 = F.from_int(2);
  SigmaSystem sys{F,
                  {{poly({F.one()}), poly({F.zero(), F.one()})},
                   {poly({F.zero(), F.one()}), poly({u})}},
                  {a0, a1}};
  SigmaSystem tri = triangularize(sys);

  // first equation untouched, second loses x0 and picks up -x1^9
  CHECK(poly_eq(F, tri.lhs[0][0], poly({F.one()})));
  CHECK(poly_eq(F, tri.lhs[0][1], poly({F.zero(), F.one()})));
  CHECK(tri.lhs[1][0].zero());
  CHECK(poly_eq(F, tri.lhs[1][1], poly({u, F.zero(), F.neg(F.one())})));
  CHECK(F.eq(tri.rhs[0], a0));
  CHECK(F.eq(tri.rhs[1], F.sub(a1, F.pow(a0, 3))));

  // the triangular system has the same solutions, exhaustively
  for (int s : {1, 2}) {
    CAPTURE(s);
    CHECK(brute_solutions(sys, s) == brute_solutions(tri, s));
  }

  // a tight exponent cap rejects the twist this elimination needs
  CHECK_THROWS_AS(triangularize(sys, 1), DegreeCapExceeded);
}

TEST_CASE("triangular systems are fixed points") {
  Fq F = Fq::make(3, 2);
  SigmaSystem sys{F,
                  {{poly({F.one(), F.x()}), poly({F.x(), F.one()})},
                   {poly({}), poly({F.from_int(2), F.one()})}},
                  {F.x(), F.one()}};
  SigmaSystem tri = triangularize(sys);
  for (int i = 0; i < 2; ++i) {
    CHECK(F.eq(tri.rhs[i], sys.rhs[i]));
    for (int j = 0; j < 2; ++j) CHECK(poly_eq(F, tri.lhs[i][j], sys.lhs[i][j]));
  }
}

TEST_CASE("system preconditions") {
  Fq F = Fq::make(3, 2);
  // linear term below the diagonal
  SigmaSystem bad1{F,
                   {{poly({F.one()}), poly({})},
                    {poly({F.one()}), poly({F.one()})}},
                   {F.zero(), F.zero()}};
  CHECK_THROWS_AS(validate_system(bad1), PreconditionViolated);
  // missing unit on the diagonal
  SigmaSystem bad2{F, {{poly({F.zero(), F.one()})}}, {F.zero()}};
  CHECK_THROWS_AS(triangularize(bad2), PreconditionViolated);
  // more equations than variables
  SigmaSystem bad3{F, {{poly({F.one()})}, {poly({})}}, {F.zero(), F.zero()}};
  CHECK_THROWS_AS(validate_system(bad3), PreconditionViolated);
  // ragged matrix
  SigmaSystem bad4{F,
                   {{poly({F.one()}), poly({})},
                    {poly({})}},
                   {F.zero(), F.zero()}};
  CHECK_THROWS_AS(validate_system(bad4), PreconditionViolated);
  SigmaSystem good{F, {{poly({F.one()})}}, {F.zero()}};
  CHECK_NOTHROW(validate_system(good));
}

TEST_CASE("single equation brute force") {
  Fq F = Fq::make(3, 2);
  // x - x^9 kills every element of the base field
  SigmaSystem idem{F, {{poly({F.one(), F.zero(), F.neg(F.one())})}}, {F.zero()}};
  CHECK(brute_solutions(idem, 1).size() == 9);
  // over the quadratic extension the solution set is still the base field
  CHECK(brute_solutions(idem, 2).size() == 9);

  // a unit times x has exactly one solution whatever the extension
  SigmaSystem lin{F, {{poly({F.x()})}}, {F.from_int(2)}};
  CHECK(brute_solutions(lin, 1).size() == 1);
  CHECK(brute_solutions(lin, 2).size() == 1);

  // budget guard on the exhaustive search
  Fq F27 = Fq::make(3, 3);
  std::mt19937 gen(0x9a3fu);
  SigmaSystem big = random_system(F27, gen, 3, 3);
  CHECK_THROWS_AS(brute_solutions(big, 2), BudgetExceeded);
}

TEST_CASE("random systems keep their solutions through elimination") {
  std::mt19937 gen(0xc1d7u);
  int trials = 0;
  for (int t = 0; t < 200; ++t) {
    Fq F = (t % 2 == 0) ? Fq::make(3, 2) : Fq::make(3, 3);
    int vars = 1 + t % 3;
    int eqs = (t % 5 == 0 && vars > 1) ? vars - 1 : vars;
    SigmaSystem sys = random_system(F, gen, eqs, vars);
    SigmaSystem tri = triangularize(sys);
    check_triangular(tri);
    for (int s : {1, 2}) {
      // stay inside the exhaustive-search budget
      uint64_t field_size = 1;
      for (int i = 0; i < s * F.r(); ++i) field_size *= 3;
      double cost = 1;
      for (int i = 0; i < vars; ++i) cost *= static_cast<double>(field_size);
      if (cost > static_cast<double>(kDefaultSolveBudget)) continue;
      auto before = brute_solutions(sys, s);
      auto after = brute_solutions(tri, s);
      CHECK(before == after);
      ++trials;
    }
  }
  CHECK(trials >= 300);  // most (field, size) combinations fit the budget
}
