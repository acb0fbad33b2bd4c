#include "rz/rootdata.hpp"

#include <algorithm>

namespace rz {

std::vector<Rat> Coweight::full_vector() const {
  std::vector<Rat> v = a;
  for (int k = rank() - 1; k >= 0; --k) v.push_back(c - a[k]);
  return v;
}

bool Coweight::is_dominant() const {
  for (int k = 0; k + 1 < rank(); ++k)
    if (a[k] < a[k + 1]) return false;
  if (!a.empty() && a.back() < c / 2) return false;
  return true;
}

Coweight operator-(const Coweight& x, const Coweight& y) {
  if (x.rank() != y.rank())
    throw IndexOutOfRange("coweight ranks " + std::to_string(x.rank()) +
                          " vs " + std::to_string(y.rank()));
  Coweight out;
  out.a.reserve(x.rank());
  for (int k = 0; k < x.rank(); ++k) out.a.push_back(x.a[k] - y.a[k]);
  out.c = x.c - y.c;
  return out;
}

Coweight newton_vector(const NewtonPolygon& np) {
  if (np.summands.empty()) throw EmptyPolygon("newton_vector");
  if (!is_symmetric(np)) throw NotSymmetric("polygon " + np.str());
  std::vector<Rat> slopes;
  for (auto& s : np.summands)
    for (int i = 0; i < s.height(); ++i) slopes.push_back(s.slope());
  std::sort(slopes.begin(), slopes.end(),
            [](const Rat& x, const Rat& y) { return y < x; });
  Coweight out;
  out.a.assign(slopes.begin(), slopes.begin() + slopes.size() / 2);
  out.c = Rat(1);
  return out;
}

Coweight mu_minuscule(int h) {
  if (h < 1) throw IndexOutOfRange("rank " + std::to_string(h));
  Coweight out;
  out.a.assign(h, Rat(1));
  out.c = Rat(1);
  return out;
}

Rat pair_two_rho(const Coweight& x) {
  Rat acc;
  int h = x.rank();
  for (int k = 1; k <= h; ++k)
    acc += Rat(2 * (h - k) + 2) * (x.a[k - 1] - x.c / 2);
  return acc;
}

Rat pair_omega(int i, const Coweight& x) {
  if (i < 1 || i > x.rank())
    throw IndexOutOfRange("omega_" + std::to_string(i) + " for rank " +
                          std::to_string(x.rank()));
  Rat acc;
  for (int k = 0; k < i; ++k) acc += x.a[k] - x.c / 2;
  return acc;
}

Rat pi1_image(const Coweight& x) { return x.c; }

}  // namespace rz
