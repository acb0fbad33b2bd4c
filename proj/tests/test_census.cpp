#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "rz/census.hpp"

using namespace rz;

namespace {

// strategies must produce identical sorted record lists
void check_agreement(const NewtonPolygon& np, long long p, int r, int lo, int hi) {
  auto fast = enumerate_census(np, p, r, lo, hi, kDefaultCensusBudget,
                               CensusStrategy::kOptimized);
  auto slow = enumerate_census(np, p, r, lo, hi, kDefaultCensusBudget,
                               CensusStrategy::kNaive);
  REQUIRE(fast.size() == slow.size());
  for (size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].lattice.same_presentation(slow[i].lattice));
    CHECK(fast[i].kappa == slow[i].kappa);
    CHECK(fast[i].a_inv == slow[i].a_inv);
    CHECK(fast[i].rel_volume == slow[i].rel_volume);
    CHECK(fast[i].a0 == slow[i].a0);
    CHECK(fast[i].a1 == slow[i].a1);
  }
}

std::string failure_message(const std::vector<CensusRecord>& recs) {
  try {
    verify_census(recs);
  } catch (const AssertionFailure& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("submodule count estimate") {
  // hand counts: subgroups of (Z/9)^2 and lines of a 1-dim F_9 space
  CHECK(census_size_estimate(2, 2, 3, 1) == 23);
  CHECK(census_size_estimate(1, 1, 3, 2) == 2);
  // width-zero windows hold exactly one module, whatever the dimension
  CHECK(census_size_estimate(1, 0, 3, 1) == 1);
  CHECK(census_size_estimate(6, 0, 5, 2) == 1);
  // subspace counts are Gaussian binomial sums
  CHECK(census_size_estimate(4, 1, 3, 1) == 1 + 40 + 130 + 40 + 1);
  CHECK(census_size_estimate(2, 2, 3, 2) == 113);
  // oversize inputs saturate instead of overflowing
  CHECK(census_size_estimate(40, 40, 3, 1) == UINT64_MAX);
  CHECK(census_size_estimate(6, 2, 3, 1) > kDefaultCensusBudget);
}

TEST_CASE("supersingular chain census") {
  for (int r : {1, 2}) {
    CAPTURE(r);
    auto recs = enumerate_census(parse_newton("1:1"), 3, r, -1, 1);
    REQUIRE(recs.size() == 5);

    // the shift chain: volume ascending means kappa descending
    std::vector<int> want_kappa{2, 1, 0, -1, -2};
    for (size_t i = 0; i < recs.size(); ++i) {
      CHECK(recs[i].kappa == want_kappa[i]);
      CHECK(recs[i].rel_volume == -want_kappa[i]);
      CHECK(recs[i].a_inv == 1);
      CHECK(recs[i].a0 == 0);  // no off-middle blocks here
      CHECK(recs[i].a1 == 0);
    }

    // identify the chain members: scalings and the F-image of the minimal one
    auto sp = recs[0].lattice.space_ptr();
    auto base = WindowLattice::minimal(sp, -1, 1);
    CHECK(recs[0].lattice.same_lattice(base.scale(-1)));
    CHECK(recs[1].lattice.same_lattice(base.f_image().scale(-1)));
    CHECK(recs[2].lattice.same_lattice(base));
    CHECK(recs[3].lattice.same_lattice(base.f_image()));
    CHECK(recs[4].lattice.same_lattice(base.scale(1)));

    // duality negates kappa and permutes the chain
    for (const auto& rec : recs) {
      auto dual = dual_lattice(rec.lattice);
      CHECK(is_dieudonne(dual));
      CHECK(kappa(dual) == -rec.kappa);
      bool found = false;
      for (const auto& other : recs)
        if (other.kappa == -rec.kappa && dual.same_lattice(other.lattice)) found = true;
      CHECK(found);
    }

    auto report = verify_census(recs);
    CHECK(report.records == 5);
    REQUIRE(report.kappa_histogram.size() == 5);
    for (int k = -2; k <= 2; ++k) CHECK(report.kappa_histogram.at(k) == 1);
  }
}

TEST_CASE("width-zero window census") {
  for (const char* nps : {"1:1", "1:2,2:1"}) {
    CAPTURE(nps);
    auto recs = enumerate_census(parse_newton(nps), 3, 1, 0, 0);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kappa == 0);
    CHECK(recs[0].rel_volume == 0);
    auto sp = recs[0].lattice.space_ptr();
    CHECK(recs[0].lattice.same_lattice(WindowLattice::minimal(sp, 0, 0)));
    auto report = verify_census(recs);
    CHECK(report.kappa_histogram.at(0) == 1);
  }
}

TEST_CASE("naive and optimized strategies agree") {
  check_agreement(parse_newton("1:1"), 3, 1, -1, 1);
  check_agreement(parse_newton("1:1"), 3, 2, -1, 1);
  check_agreement(parse_newton("1:1,1:1"), 3, 1, 0, 1);
}

TEST_CASE("two supersingular blocks census") {
  auto np = parse_newton("1:1,1:1");
  REQUIRE(census_size_estimate(4, 2, 3, 1) <= kDefaultCensusBudget);
  auto recs = enumerate_census(np, 3, 1, -1, 1);
  REQUIRE(!recs.empty());
  bool saw_two = false;
  for (const auto& rec : recs) {
    CHECK((rec.a_inv == 1 || rec.a_inv == 2));
    if (rec.a_inv == 2) saw_two = true;
  }
  CHECK(saw_two);
  auto report = verify_census(recs);
  CHECK(report.records == recs.size());
  // a symmetric window makes the census stable under duality
  for (const auto& [k, count] : report.kappa_histogram)
    CHECK(report.kappa_histogram.at(-k) == count);
}

TEST_CASE("budget guard") {
  auto np = parse_newton("1:1");
  CHECK_THROWS_AS(enumerate_census(np, 3, 1, -1, 1, 1), BudgetExceeded);
  try {
    enumerate_census(np, 3, 1, -1, 1, 1);
  } catch (const BudgetExceeded& e) {
    std::string msg = e.what();
    CHECK(msg.find("budget of 1") != std::string::npos);
  }
  // three supersingular blocks at width two blow the default budget
  CHECK_THROWS_AS(enumerate_census(parse_newton("1:1,1:1,1:1"), 3, 1, -1, 1),
                  BudgetExceeded);
}

TEST_CASE("verification rejects corrupt records") {
  auto recs = enumerate_census(parse_newton("1:1"), 3, 1, -1, 1);
  REQUIRE(recs.size() == 5);

  auto corrupt = recs;
  corrupt[3].kappa = 7;
  CHECK_THROWS_AS(verify_census(corrupt), AssertionFailure);
  CHECK(failure_message(corrupt).find("record 3") != std::string::npos);

  corrupt = recs;
  corrupt[1].a_inv = 0;
  CHECK_THROWS_AS(verify_census(corrupt), AssertionFailure);

  corrupt = recs;
  corrupt[0].rel_volume += 1;
  CHECK_THROWS_AS(verify_census(corrupt), AssertionFailure);

  corrupt = recs;
  corrupt[2].lattice = corrupt[2].lattice.scale(1);  // volume and kappa both stale
  CHECK_THROWS_AS(verify_census(corrupt), AssertionFailure);

  corrupt = recs;
  corrupt[4].a0 = 5;
  CHECK_THROWS_AS(verify_census(corrupt), AssertionFailure);
}

TEST_CASE("census input validation") {
  CHECK_THROWS_AS(enumerate_census(parse_newton("1:2"), 3, 1, 0, 1), NotSymmetric);
  CHECK_THROWS_AS(enumerate_census(parse_newton("1:1"), 3, 1, 1, 0), WindowTooSmall);
}
