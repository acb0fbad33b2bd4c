#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rz/errors.hpp"
#include "rz/fq.hpp"

namespace rz {

// additive polynomial x |-> sum_l coef[l] * x^{p^l} over a finite field;
// keep trailing zero coefficients trimmed (ap_normalize) so degree() is the
// honest top exponent
struct AdditivePoly {
  std::vector<Fq::Elt> coef;

  // largest l with a nonzero coefficient, -1 for the zero map
  int degree() const;
  bool zero() const { return degree() < 0; }
};

AdditivePoly ap_normalize(AdditivePoly a);
AdditivePoly ap_add(const Fq& F, const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly ap_sub(const Fq& F, const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly ap_scale(const Fq& F, const Fq::Elt& c, const AdditivePoly& a);
// compose with the t-th Frobenius power on the left: coefficients are raised
// to p^t and every exponent p^l becomes p^{l+t}
AdditivePoly ap_twist(const Fq& F, const AdditivePoly& a, int t);
Fq::Elt ap_eval(const Fq& F, const AdditivePoly& a, const Fq::Elt& x);

// system sum_j lhs[i][j](x_j) = rhs[i]; the linear (l = 0) coefficient of
// lhs[i][j] must vanish for j < i and be nonzero for j = i
struct SigmaSystem {
  Fq field;
  std::vector<std::vector<AdditivePoly>> lhs;  // [equation][variable]
  std::vector<Fq::Elt> rhs;                    // [equation]

  int equations() const { return static_cast<int>(lhs.size()); }
  int variables() const { return lhs.empty() ? 0 : static_cast<int>(lhs[0].size()); }
};

// shape and linear-coefficient pattern; throws PreconditionViolated
void validate_system(const SigmaSystem& sys);

// Frobenius-twisted Gauss elimination: returns an equivalent system with
// lhs[i][j] = 0 for j < i and the diagonal pattern intact.  Solution sets
// agree over every extension field, because each step subtracts an
// invertible multiple of a Frobenius twist of another equation.  Any
// intermediate exponent beyond p^max_sigma_power aborts the run.
SigmaSystem triangularize(SigmaSystem sys, int max_sigma_power = 8);

inline constexpr uint64_t kDefaultSolveBudget = 10'000'000;

// exhaustive solution vectors over the degree-s extension of the base field,
// reported as element indices of the canonical extension returned by
// Fq::make(p, r*s); throws BudgetExceeded when q^{s * variables} is too big
std::set<std::vector<uint64_t>> brute_solutions(const SigmaSystem& sys, int s,
                                                uint64_t budget = kDefaultSolveBudget);

}  // namespace rz
