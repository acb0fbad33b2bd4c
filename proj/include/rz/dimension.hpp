#pragma once
// Dimension of the reduced moduli space of polarized p-divisible groups with
// a fixed symmetric Newton polygon, computed three independent ways:
//   dim_closed_form  - combinatorial closed form in the summand data,
//   dim_weight_floor - weight pairing with floor corrections,
//   dim_defect       - weight pairing minus half the defect.
// All three must agree on every symmetric polygon; the report wires that
// tripwire through to callers.

#include "rz/newton.hpp"
#include "rz/rational.hpp"

namespace rz {

namespace testing {
// Negative-control hook: corrupt the defect rounding so the self-check /
// acceptance machinery can prove it would notice a broken formula.
extern bool mutate_defect_ceil;
}  // namespace testing

// (1/2) (sum_j (m_j-1)(n_j-1)/2 + sum_{j<j'} m_j n_{j'} + m(np));
// summands ordered ascending by slope.  Exact rational; integrality is a
// proved identity, asserted by full_report rather than here.
Rat dim_closed_form(const NewtonPolygon& np);

// Non-polarized moduli dimension: sum_j (m_j-1)(n_j-1)/2 + sum_{j<j'} m_j n_{j'}.
// Integer for every polygon (coprime summands); NotIntegral is defensive.
long long dim_nonpolarized(const NewtonPolygon& np);

// defect = h - floor(l/2) for height 2h and l summands
int defect(const NewtonPolygon& np);

// <2rho, mu-nu> + sum_{i=1..h} floor(<omega_i, nu-mu>)
Rat dim_weight_floor(const NewtonPolygon& np);

// <rho, mu-nu> - defect/2
Rat dim_defect(const NewtonPolygon& np);

// Number of free parameters at level i of the extension filtration for
// m-invariant m: max{0, ceil((i+1)/2) - max{0, i-m+1}}.
long long level_free_count(long long i, long long m);

// sum_i level_free_count(i, m), plus m when the polarized splitting has a
// middle block.  Asserts the closed form m(m+1)/2 (+m); ClosedFormMismatch.
long long extension_dimension(long long m, bool has_middle);

struct DimensionReport {
  NewtonPolygon np;
  int height = 0, h = 0, l = 0;
  long long m = 0;
  int defect = 0;
  Rat dim_closed_form, dim_weight_floor, dim_defect;
  long long dim_nonpolarized_n0 = 0;  // of the N0 block
  long long extension_dim = 0;
  bool has_middle = false;
  bool agree = false;
};

// Computes every field and asserts the decomposition identity
// dim_closed_form = dim_nonpolarized(N0) + extension_dimension(m, middle).
// Raises EmptyPolygon / NotSymmetric / AssertionFailure.
DimensionReport full_report(const NewtonPolygon& np);

}  // namespace rz
