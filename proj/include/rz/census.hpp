#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rz/dieulattice.hpp"
#include "rz/newton.hpp"

namespace rz {

// One self-dual-up-to-scalar Dieudonne lattice found in a window, with every
// invariant the duality relations constrain.
struct CensusRecord {
  WindowLattice lattice;
  int kappa = 0;
  int a_inv = 0;
  long long rel_volume = 0;
  int a0 = 0;  // a-invariant of the projection to the slope < 1/2 block
  int a1 = 0;  // a-invariant of the intersection with the slope > 1/2 block
};

enum class CensusStrategy {
  kOptimized,  // breadth-first closure search over F,V-stable submodules
  kNaive,      // enumerate every submodule, then filter (the slow oracle)
};

inline constexpr uint64_t kDefaultCensusBudget = 10'000'000;

// Number of submodules of (W_s(F_{p^r}))^dim, the naive search-space size;
// saturates at UINT64_MAX instead of overflowing.
uint64_t census_size_estimate(int dim, int s, long long p, int r);

// Every F,V-stable, self-dual-up-to-scalar lattice between p^{hi} Lambda_min
// and p^{lo} Lambda_min, each exactly once, sorted by (rel_volume, basis key).
// Throws BudgetExceeded when the pre-flight estimate exceeds the budget.
std::vector<CensusRecord> enumerate_census(
    const NewtonPolygon& np, long long p, int r, int lo, int hi,
    uint64_t budget = kDefaultCensusBudget,
    CensusStrategy strategy = CensusStrategy::kOptimized);

struct CensusReport {
  std::map<int, long long> kappa_histogram;
  size_t records = 0;
};

// Re-derives every invariant on every record and checks the cross-block
// duality relations; AssertionFailure names the first offending record.
CensusReport verify_census(const std::vector<CensusRecord>& records);

}  // namespace rz
