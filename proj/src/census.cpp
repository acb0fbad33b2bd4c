#include "rz/census.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <string>

namespace rz {

namespace {

uint64_t sat_add(uint64_t a, uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

uint64_t sat_pow(uint64_t q, int e) {
  uint64_t x = 1;
  while (e-- > 0) x = sat_mul(x, q);
  return x;
}

}  // namespace

uint64_t census_size_estimate(int dim, int s, long long p, int r) {
  // submodules of the type-(s^dim) module over the chain ring, counted by
  // conjugate type: sum over dim >= m_1 >= ... >= m_s >= 0 of
  //   prod_i q^{m_{i+1}(dim - m_i)} * [dim - m_{i+1} choose m_i - m_{i+1}]_q
  // folded over positions right to left, so the cost is s * dim^2 and never
  // walks the (exponentially many) sequences one by one
  if (s <= 0) return 1;
  uint64_t q = sat_pow(static_cast<uint64_t>(p), r);
  std::vector<std::vector<uint64_t>> gb(
      static_cast<size_t>(dim) + 1, std::vector<uint64_t>(static_cast<size_t>(dim) + 1, 0));
  gb[0][0] = 1;
  for (int n = 1; n <= dim; ++n) {
    gb[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      gb[n][k] = sat_add(gb[n - 1][k - 1], sat_mul(sat_pow(q, k), gb[n - 1][k]));
  }
  std::vector<uint64_t> qp(static_cast<size_t>(dim) * dim + 1);
  qp[0] = 1;
  for (size_t e = 1; e < qp.size(); ++e) qp[e] = sat_mul(qp[e - 1], q);

  // E[b] = sum over tails m_i = b >= ... >= m_s >= 0 of the factors they own
  std::vector<uint64_t> E(static_cast<size_t>(dim) + 1);
  for (int b = 0; b <= dim; ++b) E[b] = gb[dim][b];
  for (int i = s - 1; i >= 1; --i) {
    std::vector<uint64_t> next(static_cast<size_t>(dim) + 1, 0);
    for (int b = 0; b <= dim; ++b)
      for (int c = 0; c <= b; ++c)
        next[b] = sat_add(next[b], sat_mul(qp[static_cast<size_t>(c) * (dim - b)],
                                           sat_mul(gb[dim - c][b - c], E[c])));
    E = std::move(next);
  }
  uint64_t total = 0;
  for (int b = 0; b <= dim; ++b) total = sat_add(total, E[b]);
  return total;
}

namespace {

using Space = std::shared_ptr<const DieuSpace>;

void row_submul(const WittRing& R, int s, int cols, uint64_t* dst,
                const uint64_t* f, const uint64_t* src) {
  int r = R.r();
  std::vector<uint64_t> t(static_cast<size_t>(r));
  for (int j = 0; j < cols; ++j) {
    R.mul(t.data(), f, src + static_cast<size_t>(j) * r, s);
    R.sub(dst + static_cast<size_t>(j) * r, dst + static_cast<size_t>(j) * r,
          t.data(), s);
  }
}

struct RawMod {
  WMat m;
  std::vector<Pivot> piv;
};

// canonical coset representative of vec against a Howell presentation
std::vector<uint64_t> raw_reduce(const WittRing& R, int s, const RawMod& M,
                                 std::vector<uint64_t> vec) {
  int r = R.r(), cols = M.m.cols;
  for (int j = 0; j < cols; ++j) R.reduce(&vec[static_cast<size_t>(j) * r], s);
  std::vector<uint64_t> f(static_cast<size_t>(r)), diff(static_cast<size_t>(r));
  for (size_t k = 0; k < M.piv.size(); ++k) {
    int c = M.piv[k].col, v = M.piv[k].val;
    uint64_t pv = R.p_pow(v);
    uint64_t* e = &vec[static_cast<size_t>(c) * r];
    for (int t = 0; t < r; ++t) diff[t] = e[t] - e[t] % pv;
    if (R.is_zero(diff.data(), s)) continue;
    R.div_pk(f.data(), diff.data(), v, s);
    row_submul(R, s, cols, vec.data(), f.data(), M.m.row(static_cast<int>(k)));
  }
  for (int j = 0; j < cols; ++j) R.reduce(&vec[static_cast<size_t>(j) * r], s);
  return vec;
}

bool raw_is_zero(const WittRing& R, int s, int cols, const std::vector<uint64_t>& v) {
  for (int j = 0; j < cols; ++j)
    if (!R.is_zero(&v[static_cast<size_t>(j) * static_cast<size_t>(R.r())], s))
      return false;
  return true;
}

// lexicographic odometer over all vectors with `limbs` limbs below `cap`;
// returns false once the odometer wraps around to zero
bool next_vector(std::vector<uint64_t>& v, uint64_t cap) {
  for (auto& x : v) {
    if (++x < cap) return true;
    x = 0;
  }
  return false;
}

// every submodule of R^k with R = W_s(F_q), each exactly once, by recursion on
// the last coordinate: a submodule is (kernel M', image ideal p^a, lift coset)
std::vector<RawMod> all_submodules(const WittRing& R, int k, int s) {
  std::vector<RawMod> out;
  int r = R.r();
  if (k == 0) {
    out.push_back(RawMod{WMat::zero(0, 0, r), {}});
    return out;
  }
  std::vector<RawMod> prev = all_submodules(R, k - 1, s);
  size_t prelen = static_cast<size_t>(k - 1) * r;
  for (const RawMod& mp : prev) {
    for (int a = 0; a <= s; ++a) {
      // lifts u with p^{s-a} u in M', one per coset modulo M'
      std::set<std::vector<uint64_t>> seen;
      std::vector<uint64_t> u(prelen, 0), scaled(prelen);
      do {
        std::vector<uint64_t> res = raw_reduce(R, s, mp, u);
        if (!seen.insert(res).second) continue;
        for (int j = 0; j < k - 1; ++j)
          R.scal_int(&scaled[static_cast<size_t>(j) * r],
                     static_cast<long long>(R.p_pow(s - a)),
                     &res[static_cast<size_t>(j) * r], s);
        if (!raw_is_zero(R, s, k - 1, raw_reduce(R, s, mp, scaled))) continue;
        WMat rows = WMat::zero(mp.m.rows + 1, k, r);
        for (int i = 0; i < mp.m.rows; ++i)
          std::copy(mp.m.row(i), mp.m.row(i) + prelen, rows.row(i));
        std::copy(res.begin(), res.end(), rows.row(mp.m.rows));
        R.from_int(rows.at(mp.m.rows, k - 1), static_cast<long long>(R.p_pow(a)), s);
        RawMod next;
        next.m = std::move(rows);
        next.piv = howell(next.m, R, s);
        out.push_back(std::move(next));
      } while (prelen > 0 && next_vector(u, R.p_pow(s)));
    }
  }
  return out;
}

// F,V closure of a generating set inside the window
WindowLattice close_under_fv(const Space& sp, int lo, int hi, WMat rows) {
  const WittRing& R = sp->ring();
  int d = sp->dim(), r = R.r(), s = hi - lo;
  WindowLattice cur = WindowLattice::from_rows(sp, lo, hi, std::move(rows));
  for (int round = 0; round <= d * s + 1; ++round) {
    const WMat& b = cur.basis();
    WMat nx = WMat::zero(3 * b.rows, d, r);
    for (int i = 0; i < b.rows; ++i) {
      std::copy(b.row(i), b.row(i) + static_cast<size_t>(d) * r, nx.row(i));
      sp->apply_f(nx.row(b.rows + i), b.row(i), s);
      sp->apply_v(nx.row(2 * b.rows + i), b.row(i), s);
    }
    WindowLattice next = WindowLattice::from_rows(sp, lo, hi, std::move(nx));
    if (next.same_presentation(cur)) return cur;
    cur = std::move(next);
  }
  throw AssertionFailure("closure did not stabilize");
}

// breadth-first search over F,V-stable submodules: children of a node are the
// closures of one-generator extensions, which reach every stable module
std::vector<WindowLattice> stable_submodules(const Space& sp, int lo, int hi) {
  const WittRing& R = sp->ring();
  int d = sp->dim(), r = R.r(), s = hi - lo;
  std::vector<WindowLattice> out{close_under_fv(sp, lo, hi, WMat::zero(0, d, r))};
  std::set<std::string> keys{out[0].key()};
  size_t len = static_cast<size_t>(d) * r;
  for (size_t qi = 0; qi < out.size(); ++qi) {
    WindowLattice lat = out[qi];
    std::set<std::vector<uint64_t>> tried;
    std::vector<uint64_t> x(len, 0);
    do {
      std::vector<uint64_t> res = lat.reduce(x.data());
      if (raw_is_zero(R, s, d, res)) continue;
      if (!tried.insert(res).second) continue;
      WMat rows = WMat::zero(lat.basis().rows + 1, d, r);
      std::copy(lat.basis().limb.begin(), lat.basis().limb.end(), rows.limb.begin());
      std::copy(res.begin(), res.end(), rows.row(lat.basis().rows));
      WindowLattice child = close_under_fv(sp, lo, hi, std::move(rows));
      if (keys.insert(child.key()).second) out.push_back(std::move(child));
    } while (len > 0 && next_vector(x, R.p_pow(s)));
  }
  return out;
}

}  // namespace

std::vector<CensusRecord> enumerate_census(const NewtonPolygon& np, long long p,
                                           int r, int lo, int hi, uint64_t budget,
                                           CensusStrategy strategy) {
  if (!is_symmetric(np)) throw NotSymmetric("census requires a symmetric polygon");
  if (hi < lo) throw WindowTooSmall("empty window");
  int s = hi - lo, d = np.height(), h = d / 2;
  uint64_t est = census_size_estimate(d, s, p, r);
  if (est > budget)
    throw BudgetExceeded("search space of " + std::to_string(est) +
                         " submodules exceeds the budget of " + std::to_string(budget));
  Space sp = DieuSpace::polarized(np, p, r, s + 2 * h + 2);

  std::vector<WindowLattice> stable;
  if (strategy == CensusStrategy::kOptimized) {
    stable = stable_submodules(sp, lo, hi);
  } else {
    for (RawMod& raw : all_submodules(sp->ring(), d, s)) {
      WindowLattice lat = WindowLattice::from_rows(sp, lo, hi, std::move(raw.m));
      if (is_dieudonne(lat)) stable.push_back(std::move(lat));
    }
  }

  std::vector<CensusRecord> out;
  for (WindowLattice& lat : stable) {
    int k;
    try {
      k = kappa(lat);
    } catch (const NotSelfDual&) {
      continue;
    }
    CensusRecord rec;
    rec.kappa = k;
    rec.a_inv = a_invariant(lat);
    rec.rel_volume = lat.rel_volume();
    SplitLattices split = split_projections(lat);
    rec.a0 = a_invariant(split.lambda0);
    rec.a1 = a_invariant(split.lambda1);
    rec.lattice = std::move(lat);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.rel_volume != b.rel_volume) return a.rel_volume < b.rel_volume;
    return a.lattice.key() < b.lattice.key();
  });
  return out;
}

CensusReport verify_census(const std::vector<CensusRecord>& records) {
  CensusReport rep;
  rep.records = records.size();
  for (size_t i = 0; i < records.size(); ++i) {
    const CensusRecord& rec = records[i];
    auto fail = [&](const std::string& what) {
      throw AssertionFailure("census record " + std::to_string(i) + ": " + what);
    };
    const WindowLattice& lat = rec.lattice;
    if (!is_dieudonne(lat)) fail("lattice is not stable under F and V");
    WindowLattice again =
        WindowLattice::from_rows(lat.space_ptr(), lat.lo(), lat.hi(), lat.basis());
    if (!again.same_presentation(lat)) fail("basis is not in canonical form");
    if (lat.rel_volume() != rec.rel_volume) fail("stored volume is stale");
    int k = 0;
    bool selfdual = true;
    try {
      k = kappa(lat);
    } catch (const NotSelfDual&) {
      selfdual = false;
    }
    if (!selfdual) fail("lattice is not self-dual up to scalar");
    if (k != rec.kappa) fail("stored kappa is stale");
    if (a_invariant(lat) != rec.a_inv) fail("stored a-invariant is stale");
    SplitLattices split = split_projections(lat);
    if (a_invariant(split.lambda0) != rec.a0) fail("stored a0 is stale");
    if (a_invariant(split.lambda1) != rec.a1) fail("stored a1 is stale");
    if (rec.a0 != rec.a1) fail("block a-invariants disagree");
    if (split.space0->dim() > 0) {
      WindowLattice dual0 = dual_in_partner_block(lat.space_ptr(), split.lambda0, 0);
      if (!dual0.same_lattice(split.lambda1.scale(rec.kappa)))
        fail("cross-block duality relation fails");
    }
    if (split.space_mid->dim() > 0) {
      if (!dual_lattice(split.half_proj).same_lattice(split.half_int.scale(rec.kappa)))
        fail("middle-block duality relation fails");
    }
    ++rep.kappa_histogram[rec.kappa];
  }
  return rep;
}

}  // namespace rz
