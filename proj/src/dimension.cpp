#include "rz/dimension.hpp"

#include "rz/rootdata.hpp"

namespace rz {

namespace testing {
bool mutate_defect_ceil = false;
}

static void require_symmetric_nonempty(const NewtonPolygon& np,
                                       const char* who) {
  if (np.summands.empty()) throw EmptyPolygon(who);
  if (!is_symmetric(np)) throw NotSymmetric(std::string(who) + ": " + np.str());
}

Rat dim_closed_form(const NewtonPolygon& np) {
  require_symmetric_nonempty(np, "dim_closed_form");
  Rat acc;
  const auto& s = np.summands;
  for (auto& sj : s) acc += Rat((long long)(sj.m - 1) * (sj.n - 1), 2);
  for (size_t j = 0; j < s.size(); ++j)
    for (size_t k = j + 1; k < s.size(); ++k)
      acc += Rat((long long)s[j].m * s[k].n);
  acc += Rat(m_invariant(np));
  return acc / 2;
}

long long dim_nonpolarized(const NewtonPolygon& np) {
  Rat acc;
  const auto& s = np.summands;
  for (auto& sj : s) acc += Rat((long long)(sj.m - 1) * (sj.n - 1), 2);
  for (size_t j = 0; j < s.size(); ++j)
    for (size_t k = j + 1; k < s.size(); ++k)
      acc += Rat((long long)s[j].m * s[k].n);
  if (!acc.is_integer())
    throw NotIntegral("dim_nonpolarized(" + np.str() + ") = " + acc.str());
  return acc.num();
}

int defect(const NewtonPolygon& np) {
  require_symmetric_nonempty(np, "defect");
  int h = np.height() / 2, l = np.length();
  int half = testing::mutate_defect_ceil ? (l + 1) / 2 : l / 2;
  return h - half;
}

Rat dim_weight_floor(const NewtonPolygon& np) {
  require_symmetric_nonempty(np, "dim_weight_floor");
  Coweight nu = newton_vector(np);
  Coweight mu = mu_minuscule(nu.rank());
  Rat acc = pair_two_rho(mu - nu);
  for (int i = 1; i <= nu.rank(); ++i)
    acc += Rat(pair_omega(i, nu - mu).floor());
  return acc;
}

Rat dim_defect(const NewtonPolygon& np) {
  require_symmetric_nonempty(np, "dim_defect");
  Coweight nu = newton_vector(np);
  Coweight mu = mu_minuscule(nu.rank());
  return pair_rho(mu - nu) - Rat(defect(np), 2);
}

long long level_free_count(long long i, long long m) {
  if (i < 0 || m < 0)
    throw IndexOutOfRange("level_free_count(" + std::to_string(i) + "," +
                          std::to_string(m) + ")");
  long long relations = std::max<long long>(0, i - m + 1);
  long long slots = (i + 2) / 2;  // ceil((i+1)/2)
  return std::max<long long>(0, slots - relations);
}

long long extension_dimension(long long m, bool has_middle) {
  long long acc = 0;
  for (long long i = 0; i < 2 * m; ++i) acc += level_free_count(i, m);
  if (has_middle) acc += m;
  long long expect = m * (m + 1) / 2 + (has_middle ? m : 0);
  if (acc != expect)
    throw ClosedFormMismatch("extension_dimension(" + std::to_string(m) +
                             ") = " + std::to_string(acc) + " expected " +
                             std::to_string(expect));
  return acc;
}

DimensionReport full_report(const NewtonPolygon& np) {
  require_symmetric_nonempty(np, "full_report");
  DimensionReport rep;
  rep.np = np;
  rep.height = np.height();
  rep.h = rep.height / 2;
  rep.l = np.length();
  rep.m = m_invariant(np);
  rep.defect = defect(np);
  rep.dim_closed_form = dim_closed_form(np);
  rep.dim_weight_floor = dim_weight_floor(np);
  rep.dim_defect = dim_defect(np);
  PolarizedSplit split = split_polarized(np);
  rep.has_middle = split.has_middle;
  rep.dim_nonpolarized_n0 = dim_nonpolarized(split.n0);
  rep.extension_dim = extension_dimension(rep.m, rep.has_middle);
  rep.agree = rep.dim_closed_form == rep.dim_weight_floor &&
              rep.dim_closed_form == rep.dim_defect;
  if (rep.dim_closed_form != Rat(rep.dim_nonpolarized_n0 + rep.extension_dim))
    throw AssertionFailure("decomposition identity fails for " + np.str() +
                           ": " + rep.dim_closed_form.str() + " vs " +
                           std::to_string(rep.dim_nonpolarized_n0) + "+" +
                           std::to_string(rep.extension_dim));
  return rep;
}

}  // namespace rz
