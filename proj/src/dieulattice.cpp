#include "rz/dieulattice.hpp"

#include <algorithm>
#include <sstream>

namespace rz {

namespace {

using Row = std::vector<uint64_t>;

// dst -= f * src entrywise; f is a single ring element
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

void row_mul(const WittRing& R, int s, int cols, uint64_t* dst, const uint64_t* f) {
  int r = R.r();
  for (int j = 0; j < cols; ++j)
    R.mul(dst + static_cast<size_t>(j) * r, dst + static_cast<size_t>(j) * r, f, s);
}

void row_scal_int(const WittRing& R, int s, int cols, uint64_t* dst, long long c) {
  int r = R.r();
  for (int j = 0; j < cols; ++j)
    R.scal_int(dst + static_cast<size_t>(j) * r, c, dst + static_cast<size_t>(j) * r, s);
}

bool row_zero(const WittRing& R, int s, int cols, const uint64_t* row) {
  int r = R.r();
  for (int j = 0; j < cols; ++j)
    if (!R.is_zero(row + static_cast<size_t>(j) * r, s)) return false;
  return true;
}

void row_reduce(const WittRing& R, int s, int cols, uint64_t* row) {
  int r = R.r();
  for (int j = 0; j < cols; ++j) R.reduce(row + static_cast<size_t>(j) * r, s);
}

// x . c over the ring at precision s
Row row_dot(const WittRing& R, int s, int cols, const uint64_t* x, const uint64_t* c) {
  int r = R.r();
  Row acc(static_cast<size_t>(r), 0), t(static_cast<size_t>(r));
  for (int j = 0; j < cols; ++j) {
    R.mul(t.data(), x + static_cast<size_t>(j) * r, c + static_cast<size_t>(j) * r, s);
    R.add(acc.data(), acc.data(), t.data(), s);
  }
  return acc;
}

}  // namespace

std::vector<Pivot> howell(WMat& M, const WittRing& R, int s) {
  const int cols = M.cols, r = M.r;
  const size_t rowlen = static_cast<size_t>(cols) * r;
  if (s < 0 || s > R.n()) throw PrecisionExhausted("window exceeds ring precision");

  std::vector<Row> work;
  for (int i = 0; i < M.rows; ++i) {
    Row row(M.row(i), M.row(i) + rowlen);
    row_reduce(R, s, cols, row.data());
    if (!row_zero(R, s, cols, row.data())) work.push_back(std::move(row));
  }

  std::vector<Row> res;
  std::vector<Pivot> piv;
  std::vector<Row> prev_res;
  std::vector<Pivot> prev_piv;

  while (true) {
    std::vector<Row> active;
    active.reserve(res.size() + work.size());
    for (auto& x : res) active.push_back(std::move(x));
    for (auto& x : work) active.push_back(std::move(x));
    res.clear();
    piv.clear();
    work.clear();

    for (int col = 0; col < cols; ++col) {
      int best = -1, bestv = s;
      for (int i = 0; i < static_cast<int>(active.size()); ++i) {
        int v = R.val(active[i].data() + static_cast<size_t>(col) * r, s);
        if (v < bestv) {
          bestv = v;
          best = i;
        }
      }
      if (best < 0) continue;
      Row pr = std::move(active[best]);
      active.erase(active.begin() + best);
      // scale so the pivot entry becomes exactly p^bestv
      {
        Row u(static_cast<size_t>(r)), uinv(static_cast<size_t>(r));
        R.div_pk(u.data(), pr.data() + static_cast<size_t>(col) * r, bestv, s);
        R.unit_inv(uinv.data(), u.data(), s);
        row_mul(R, s, cols, pr.data(), uinv.data());
        // clean the representative
        R.zero(pr.data() + static_cast<size_t>(col) * r);
        pr[static_cast<size_t>(col) * r] = R.p_pow(bestv);
      }
      for (auto& row : active) {
        const uint64_t* e = row.data() + static_cast<size_t>(col) * r;
        if (R.is_zero(e, s)) continue;
        Row f(static_cast<size_t>(r));
        R.div_pk(f.data(), e, bestv, s);  // exact by minimality of bestv
        row_submul(R, s, cols, row.data(), f.data(), pr.data());
      }
      res.push_back(std::move(pr));
      piv.push_back({col, bestv});
    }

    // Howell completion: trailing multiples of positive-valuation pivots may
    // expose pivots further right; iterate to the canonical fixpoint.
    if (res == prev_res && piv.size() == prev_piv.size()) break;
    prev_res = res;
    prev_piv = piv;
    bool queued = false;
    for (size_t i = 0; i < res.size(); ++i) {
      if (piv[i].val == 0) continue;
      Row tail = res[i];
      row_scal_int(R, s, cols, tail.data(), static_cast<long long>(R.p_pow(s - piv[i].val)));
      if (!row_zero(R, s, cols, tail.data())) {
        work.push_back(std::move(tail));
        queued = true;
      }
    }
    if (!queued) break;
  }

  // entries above each pivot reduced mod p^{pivot valuation}
  for (size_t k = 0; k < res.size(); ++k) {
    int c = piv[k].col, v = piv[k].val;
    uint64_t pv = R.p_pow(v);
    for (size_t j = 0; j < k; ++j) {
      uint64_t* e = res[j].data() + static_cast<size_t>(c) * r;
      Row diff(e, e + r);
      for (int t = 0; t < r; ++t) diff[t] -= diff[t] % pv;
      if (R.is_zero(diff.data(), s)) continue;
      Row f(static_cast<size_t>(r));
      R.div_pk(f.data(), diff.data(), v, s);
      row_submul(R, s, cols, res[j].data(), f.data(), res[k].data());
    }
  }

  WMat out = WMat::zero(static_cast<int>(res.size()), cols, r);
  for (size_t i = 0; i < res.size(); ++i)
    std::copy(res[i].begin(), res[i].end(), out.row(static_cast<int>(i)));
  M = std::move(out);
  return piv;
}

namespace {

// {x in span(gens) : x . c == 0}, presented by the same number of generators
WMat intersect_constraint(const WittRing& R, int s, WMat gens, const uint64_t* c) {
  int r = R.r();
  std::vector<Row> vals;
  vals.reserve(static_cast<size_t>(gens.rows));
  int best = -1, bestv = s;
  for (int i = 0; i < gens.rows; ++i) {
    vals.push_back(row_dot(R, s, gens.cols, gens.row(i), c));
    int v = R.val(vals.back().data(), s);
    if (v < bestv) {
      bestv = v;
      best = i;
    }
  }
  if (best < 0) return gens;  // every generator already satisfies the constraint
  Row u(static_cast<size_t>(r)), uinv(static_cast<size_t>(r)), f(static_cast<size_t>(r));
  R.div_pk(u.data(), vals[best].data(), bestv, s);
  R.unit_inv(uinv.data(), u.data(), s);
  WMat out = WMat::zero(gens.rows, gens.cols, r);
  int k = 0;
  for (int i = 0; i < gens.rows; ++i) {
    if (i == best) continue;
    std::copy(gens.row(i), gens.row(i) + static_cast<size_t>(gens.cols) * r, out.row(k));
    if (!R.is_zero(vals[i].data(), s)) {
      Row q(static_cast<size_t>(r));
      R.div_pk(q.data(), vals[i].data(), bestv, s);
      R.mul(f.data(), q.data(), uinv.data(), s);
      row_submul(R, s, gens.cols, out.row(k), f.data(), gens.row(best));
    }
    ++k;
  }
  std::copy(gens.row(best), gens.row(best) + static_cast<size_t>(gens.cols) * r,
            out.row(k));
  row_scal_int(R, s, gens.cols, out.row(k), static_cast<long long>(R.p_pow(s - bestv)));
  return out;
}

}  // namespace

// ----------------------------------------------------------------- DieuSpace

std::shared_ptr<const DieuSpace> DieuSpace::build(const NewtonPolygon& np,
                                                  std::shared_ptr<const WittRing> ring,
                                                  bool with_pairing) {
  auto sp = std::make_shared<DieuSpace>();
  sp->np_ = np;
  sp->ring_ = std::move(ring);
  int d = np.height();
  sp->dim_ = d;
  sp->has_pairing_ = with_pairing;
  sp->f_perm_.assign(d, 0);
  sp->f_coef_.assign(d, 0);
  sp->v_perm_.assign(d, 0);
  sp->v_coef_.assign(d, 0);
  sp->partner_.assign(d, -1);
  sp->sign_.assign(d, 0);

  long long p = sp->ring_->p();
  int l = static_cast<int>(np.summands.size());
  std::vector<int> off(static_cast<size_t>(l) + 1, 0);
  for (int j = 0; j < l; ++j) off[j + 1] = off[j] + np.summands[j].height();

  for (int j = 0; j < l; ++j) {
    int m = np.summands[j].m, hj = np.summands[j].height();
    // the unique self-paired summand of a polarized space carries the sign
    // that makes the pairing axiom <Fx,Fy> = p sigma<x,y> hold
    bool signed_wrap = with_pairing && (l % 2 == 1) && (j == l / 2);
    for (int i = 1; i <= hj; ++i) {
      int g = off[j] + i - 1;
      if (i + m <= hj) {
        sp->f_perm_[g] = off[j] + i + m - 1;
        sp->f_coef_[g] = 1;
      } else {
        sp->f_perm_[g] = off[j] + (i + m - hj) - 1;
        sp->f_coef_[g] = signed_wrap ? -p : p;
      }
    }
  }
  for (int g = 0; g < d; ++g) {
    int gp = sp->f_perm_[g];
    sp->v_perm_[gp] = g;
    sp->v_coef_[gp] = p / sp->f_coef_[g];  // 1 -> p, p -> 1, -p -> -1
  }

  if (with_pairing) {
    if (!is_symmetric(np)) throw NotSymmetric("pairing requires a symmetric polygon");
    int h = d / 2;
    for (int j = 0; j < l; ++j) {
      int hj = np.summands[j].height();
      for (int i = 1; i <= hj; ++i) {
        int g = off[j] + i - 1;
        sp->partner_[g] = off[l - 1 - j] + (hj - i);
        sp->sign_[g] = (g < h) ? 1 : -1;
      }
    }
  }

  sp->n0_end_ = 0;
  sp->mid_end_ = 0;
  for (int j = 0; j < l; ++j) {
    const SimpleSummand& sm = np.summands[j];
    if (2 * sm.m < sm.height()) sp->n0_end_ = off[j + 1];   // slope < 1/2
    if (2 * sm.m <= sm.height()) sp->mid_end_ = off[j + 1];  // slope <= 1/2
  }
  sp->mid_end_ = std::max(sp->mid_end_, sp->n0_end_);
  return sp;
}

std::shared_ptr<const DieuSpace> DieuSpace::polarized(const NewtonPolygon& np,
                                                      long long p, int r, int n) {
  if (!is_symmetric(np)) throw NotSymmetric("polarized model requires a symmetric polygon");
  return build(np, std::make_shared<const WittRing>(p, r, n), true);
}

std::shared_ptr<const DieuSpace> DieuSpace::plain(const NewtonPolygon& np,
                                                  long long p, int r, int n) {
  return build(np, std::make_shared<const WittRing>(p, r, n), false);
}

std::shared_ptr<const DieuSpace> DieuSpace::sub_block(int which) const {
  std::vector<SimpleSummand> slice;
  for (const SimpleSummand& sm : np_.summands) {
    int cls = (2 * sm.m < sm.height()) ? 0 : (2 * sm.m == sm.height() ? 1 : 2);
    if (cls == which) slice.push_back(sm);
  }
  NewtonPolygon sub;
  sub.summands = std::move(slice);
  // the middle block keeps a pairing of its own; the outer blocks are
  // totally isotropic
  return build(sub, ring_, has_pairing_ && which == 1);
}

bool DieuSpace::equivalent(const DieuSpace& o) const {
  if (dim_ != o.dim_ || has_pairing_ != o.has_pairing_) return false;
  if (!ring_->same(*o.ring_)) return false;
  if (np_.summands.size() != o.np_.summands.size()) return false;
  for (size_t j = 0; j < np_.summands.size(); ++j)
    if (np_.summands[j].m != o.np_.summands[j].m ||
        np_.summands[j].n != o.np_.summands[j].n)
      return false;
  return true;
}

long long DieuSpace::gram(int g, int gp) const {
  if (!has_pairing_) return 0;
  if (g < 0 || g >= dim_ || gp < 0 || gp >= dim_) throw IndexOutOfRange("basis index");
  return partner_[g] == gp ? sign_[g] : 0;
}

void DieuSpace::apply_f(uint64_t* out, const uint64_t* in, int s) const {
  int r = ring_->r();
  std::vector<uint64_t> t(static_cast<size_t>(r));
  std::vector<uint64_t> acc(static_cast<size_t>(dim_) * r, 0);
  for (int g = 0; g < dim_; ++g) {
    const uint64_t* c = in + static_cast<size_t>(g) * r;
    if (ring_->is_zero(c, s)) continue;
    ring_->sigma(t.data(), c, s);
    ring_->scal_int(t.data(), f_coef_[g], t.data(), s);
    uint64_t* dst = acc.data() + static_cast<size_t>(f_perm_[g]) * r;
    ring_->add(dst, dst, t.data(), s);
  }
  std::copy(acc.begin(), acc.end(), out);
}

void DieuSpace::apply_v(uint64_t* out, const uint64_t* in, int s) const {
  int r = ring_->r();
  std::vector<uint64_t> t(static_cast<size_t>(r));
  std::vector<uint64_t> acc(static_cast<size_t>(dim_) * r, 0);
  for (int g = 0; g < dim_; ++g) {
    const uint64_t* c = in + static_cast<size_t>(g) * r;
    if (ring_->is_zero(c, s)) continue;
    ring_->sigma_inv(t.data(), c, s);
    ring_->scal_int(t.data(), v_coef_[g], t.data(), s);
    uint64_t* dst = acc.data() + static_cast<size_t>(v_perm_[g]) * r;
    ring_->add(dst, dst, t.data(), s);
  }
  std::copy(acc.begin(), acc.end(), out);
}

void DieuSpace::pair(uint64_t* out, const uint64_t* x, const uint64_t* y, int s) const {
  if (!has_pairing_) throw PreconditionViolated("space carries no pairing");
  int r = ring_->r();
  std::vector<uint64_t> t(static_cast<size_t>(r)), acc(static_cast<size_t>(r), 0);
  for (int g = 0; g < dim_; ++g) {
    int gp = partner_[g];
    if (gp < 0) continue;
    ring_->mul(t.data(), x + static_cast<size_t>(g) * r,
               y + static_cast<size_t>(gp) * r, s);
    ring_->scal_int(t.data(), sign_[g], t.data(), s);
    ring_->add(acc.data(), acc.data(), t.data(), s);
  }
  std::copy(acc.begin(), acc.end(), out);
}

// ------------------------------------------------------------- WindowLattice

WindowLattice WindowLattice::from_rows(std::shared_ptr<const DieuSpace> sp, int lo,
                                       int hi, WMat rows) {
  if (hi < lo) throw WindowTooSmall("empty window");
  WindowLattice L;
  L.space_ = std::move(sp);
  L.lo_ = lo;
  L.hi_ = hi;
  if (rows.cols != L.space_->dim() || rows.r != L.space_->ring().r())
    throw RingMismatch("row shape does not match the space");
  L.pivots_ = howell(rows, L.space_->ring(), hi - lo);
  L.basis_ = std::move(rows);
  return L;
}

WindowLattice WindowLattice::minimal(std::shared_ptr<const DieuSpace> sp, int lo, int hi) {
  if (lo > 0 || hi < 0)
    throw VectorOutsideWindow("window does not contain the standard lattice");
  const WittRing& R = sp->ring();
  if (hi - lo > R.n()) throw PrecisionExhausted("window exceeds ring precision");
  int d = sp->dim(), r = R.r();
  WMat rows = WMat::zero(d, d, r);
  long long scale = static_cast<long long>(R.p_pow(-lo));
  for (int g = 0; g < d; ++g) R.from_int(rows.at(g, g), scale, hi - lo);
  return from_rows(std::move(sp), lo, hi, std::move(rows));
}

long long WindowLattice::length() const {
  long long len = 0;
  for (const Pivot& pv : pivots_) len += width() - pv.val;
  return len;
}

long long WindowLattice::rel_volume() const {
  return static_cast<long long>(space_->dim()) * hi_ - length();
}

std::vector<uint64_t> WindowLattice::reduce(const uint64_t* coords) const {
  const WittRing& R = space_->ring();
  int r = R.r(), d = space_->dim(), s = width();
  std::vector<uint64_t> vec(coords, coords + static_cast<size_t>(d) * r);
  row_reduce(R, s, d, vec.data());
  std::vector<uint64_t> f(static_cast<size_t>(r)), diff(static_cast<size_t>(r));
  for (size_t k = 0; k < pivots_.size(); ++k) {
    int c = pivots_[k].col, v = pivots_[k].val;
    uint64_t pv = R.p_pow(v);
    uint64_t* e = vec.data() + static_cast<size_t>(c) * r;
    for (int t = 0; t < r; ++t) diff[t] = e[t] - e[t] % pv;
    if (R.is_zero(diff.data(), s)) continue;
    R.div_pk(f.data(), diff.data(), v, s);
    row_submul(R, s, d, vec.data(), f.data(), basis_.row(static_cast<int>(k)));
  }
  row_reduce(R, s, d, vec.data());
  return vec;
}

bool WindowLattice::member(const uint64_t* coords) const {
  std::vector<uint64_t> res = reduce(coords);
  return row_zero(space_->ring(), width(), space_->dim(), res.data());
}

WindowLattice WindowLattice::widen(int nlo, int nhi) const {
  if (nlo > lo_ || nhi < hi_) throw WindowTooSmall("narrowing is not supported");
  if (nlo == lo_ && nhi == hi_) return *this;
  const WittRing& R = space_->ring();
  if (nhi - nlo > R.n()) throw PrecisionExhausted("window exceeds ring precision");
  int d = space_->dim(), r = R.r();
  int ns = nhi - nlo;
  WMat rows = WMat::zero(basis_.rows + d, d, r);
  long long lift = static_cast<long long>(R.p_pow(lo_ - nlo));
  for (int i = 0; i < basis_.rows; ++i) {
    std::copy(basis_.row(i), basis_.row(i) + static_cast<size_t>(d) * r, rows.row(i));
    row_scal_int(R, ns, d, rows.row(i), lift);
  }
  // the old floor p^hi * Lambda_min is no longer zero in the wider window
  long long fl = static_cast<long long>(R.p_pow(hi_ - nlo));
  for (int g = 0; g < d; ++g) R.from_int(rows.at(basis_.rows + g, g), fl, ns);
  return from_rows(space_, nlo, nhi, std::move(rows));
}

WindowLattice WindowLattice::scale(int k) const {
  WindowLattice L = *this;
  L.lo_ += k;
  L.hi_ += k;
  return L;
}

bool WindowLattice::same_presentation(const WindowLattice& o) const {
  if (!space_->equivalent(*o.space_)) return false;
  if (lo_ != o.lo_ || hi_ != o.hi_) return false;
  if (pivots_.size() != o.pivots_.size()) return false;
  for (size_t i = 0; i < pivots_.size(); ++i)
    if (pivots_[i].col != o.pivots_[i].col || pivots_[i].val != o.pivots_[i].val)
      return false;
  return basis_.limb == o.basis_.limb;
}

bool WindowLattice::same_lattice(const WindowLattice& o) const {
  if (!space_->equivalent(*o.space_)) return false;
  int nlo = std::min(lo_, o.lo_), nhi = std::max(hi_, o.hi_);
  return widen(nlo, nhi).same_presentation(o.widen(nlo, nhi));
}

WindowLattice WindowLattice::f_image() const {
  const WittRing& R = space_->ring();
  int d = space_->dim(), r = R.r(), s1 = width() + 1;
  if (s1 > R.n()) throw PrecisionExhausted("window exceeds ring precision");
  WMat rows = WMat::zero(basis_.rows + d, d, r);
  for (int i = 0; i < basis_.rows; ++i) space_->apply_f(rows.row(i), basis_.row(i), s1);
  // F of the old floor: p^{hi} F(e_g)
  long long fl = static_cast<long long>(R.p_pow(hi_ - lo_));
  for (int g = 0; g < d; ++g)
    R.from_int(rows.at(basis_.rows + g, space_->f_perm(g)), fl * space_->f_coef(g), s1);
  return from_rows(space_, lo_, hi_ + 1, std::move(rows));
}

WindowLattice WindowLattice::v_image() const {
  const WittRing& R = space_->ring();
  int d = space_->dim(), r = R.r(), s1 = width() + 1;
  if (s1 > R.n()) throw PrecisionExhausted("window exceeds ring precision");
  WMat rows = WMat::zero(basis_.rows + d, d, r);
  for (int i = 0; i < basis_.rows; ++i) space_->apply_v(rows.row(i), basis_.row(i), s1);
  long long fl = static_cast<long long>(R.p_pow(hi_ - lo_));
  for (int g = 0; g < d; ++g)
    R.from_int(rows.at(basis_.rows + g, space_->v_perm(g)), fl * space_->v_coef(g), s1);
  return from_rows(space_, lo_, hi_ + 1, std::move(rows));
}

WindowLattice WindowLattice::sum(const WindowLattice& o) const {
  if (!space_->equivalent(*o.space_) || lo_ != o.lo_ || hi_ != o.hi_)
    throw PreconditionViolated("sum requires matching windows");
  const WittRing& R = space_->ring();
  int d = space_->dim(), r = R.r();
  WMat rows = WMat::zero(basis_.rows + o.basis_.rows, d, r);
  for (int i = 0; i < basis_.rows; ++i)
    std::copy(basis_.row(i), basis_.row(i) + static_cast<size_t>(d) * r, rows.row(i));
  for (int i = 0; i < o.basis_.rows; ++i)
    std::copy(o.basis_.row(i), o.basis_.row(i) + static_cast<size_t>(d) * r,
              rows.row(basis_.rows + i));
  return from_rows(space_, lo_, hi_, std::move(rows));
}

std::string WindowLattice::key() const {
  std::ostringstream os;
  os << lo_ << ":" << hi_ << "#";
  for (const Pivot& pv : pivots_) os << pv.col << "." << pv.val << ";";
  os << "|";
  for (uint64_t x : basis_.limb) os << x << ",";
  return os.str();
}

// ---------------------------------------------------------------- operations

int monomial_valuation(const WittScalar& a, int i, int j) {
  if (i < 0 || j < 0) throw IndexOutOfRange("negative operator exponent");
  int v = a.valuation();
  if (v == a.ring().n())
    throw PrecisionExhausted("scalar valuation undetermined at this precision");
  return 2 * v + i + j;
}

bool is_dieudonne(const WindowLattice& lat) {
  const DieuSpace& sp = lat.space();
  const WittRing& R = sp.ring();
  int d = sp.dim(), r = R.r(), s = lat.width();
  std::vector<uint64_t> img(static_cast<size_t>(d) * r);
  for (int i = 0; i < lat.basis().rows; ++i) {
    sp.apply_f(img.data(), lat.basis().row(i), s);
    if (!lat.member(img.data())) return false;
    sp.apply_v(img.data(), lat.basis().row(i), s);
    if (!lat.member(img.data())) return false;
  }
  return true;
}

WindowLattice dual_lattice(const WindowLattice& lat) {
  const DieuSpace& sp = lat.space();
  if (!sp.has_pairing()) throw PreconditionViolated("dual requires a pairing");
  const WittRing& R = sp.ring();
  int d = sp.dim(), r = R.r(), s = lat.width();
  // x = sum b_g p^{-hi} e_g is integral against row a iff b . (G a) = 0 mod p^s
  WMat gens = WMat::zero(d, d, r);
  for (int g = 0; g < d; ++g) R.one(gens.at(g, g));
  std::vector<uint64_t> c(static_cast<size_t>(d) * r);
  for (int i = 0; i < lat.basis().rows; ++i) {
    std::fill(c.begin(), c.end(), 0);
    const uint64_t* a = lat.basis().row(i);
    for (int g = 0; g < d; ++g) {
      // gram is monomial, so c[g] picks up a single term sign_g * a[partner(g)]
      for (int gp = 0; gp < d; ++gp) {
        long long val = sp.gram(g, gp);
        if (val == 0) continue;
        R.scal_int(c.data() + static_cast<size_t>(g) * r, val,
                   a + static_cast<size_t>(gp) * r, s);
      }
    }
    gens = intersect_constraint(R, s, std::move(gens), c.data());
  }
  return WindowLattice::from_rows(lat.space_ptr(), -lat.hi(), -lat.lo(), std::move(gens));
}

int kappa(const WindowLattice& lat) {
  const DieuSpace& sp = lat.space();
  if (!sp.has_pairing()) throw PreconditionViolated("kappa requires a pairing");
  int d = sp.dim();
  if (d == 0) return 0;
  int h = d / 2;
  long long rel = lat.rel_volume();
  if (rel % h != 0) throw NotSelfDual("volume is not a multiple of the scalar step");
  int k = static_cast<int>(-rel / h);
  if (!dual_lattice(lat).same_lattice(lat.scale(k)))
    throw NotSelfDual("dual is not a scalar multiple");
  return k;
}

int a_invariant(const WindowLattice& lat) {
  if (!is_dieudonne(lat)) throw NotDieudonne("lattice not stable under F and V");
  WindowLattice wide = lat.widen(lat.lo(), lat.hi() + 1);
  WindowLattice fv = lat.f_image().sum(lat.v_image());
  return static_cast<int>(wide.length() - fv.length());
}

WindowLattice generated_module(std::shared_ptr<const DieuSpace> sp, int lo, int hi,
                               const std::vector<uint64_t>& v) {
  const WittRing& R = sp->ring();
  int d = sp->dim(), r = R.r(), s = hi - lo;
  if (static_cast<int>(v.size()) != d * r) throw RingMismatch("coordinate size mismatch");
  WMat seed = WMat::zero(1, d, r);
  std::copy(v.begin(), v.end(), seed.row(0));
  WindowLattice cur = WindowLattice::from_rows(sp, lo, hi, std::move(seed));
  for (int round = 0; round <= d * s + 1; ++round) {
    const WMat& b = cur.basis();
    WMat rows = WMat::zero(3 * b.rows, d, r);
    for (int i = 0; i < b.rows; ++i) {
      std::copy(b.row(i), b.row(i) + static_cast<size_t>(d) * r, rows.row(i));
      sp->apply_f(rows.row(b.rows + i), b.row(i), s);
      sp->apply_v(rows.row(2 * b.rows + i), b.row(i), s);
    }
    WindowLattice next = WindowLattice::from_rows(sp, lo, hi, std::move(rows));
    if (next.same_presentation(cur)) return cur;
    cur = std::move(next);
  }
  throw AssertionFailure("closure did not stabilize");
}

WindowLattice lattice_from_e_coords(std::shared_ptr<const DieuSpace> sp, int lo, int hi,
                                    const std::vector<std::vector<long long>>& gens) {
  const WittRing& R = sp->ring();
  int d = sp->dim(), r = R.r(), s = hi - lo;
  WMat rows = WMat::zero(static_cast<int>(gens.size()), d, r);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<int>(gens[i].size()) != d)
      throw RingMismatch("coordinate size mismatch");
    for (int g = 0; g < d; ++g) {
      long long cval = gens[i][g];
      if (lo > 0) {
        long long q = static_cast<long long>(R.p_pow(lo));
        if (cval % q != 0)
          throw VectorOutsideWindow("generator is not inside the window ceiling");
        cval /= q;
      } else {
        cval *= static_cast<long long>(R.p_pow(-lo));
      }
      R.from_int(rows.at(static_cast<int>(i), g), cval, s);
    }
  }
  return WindowLattice::from_rows(std::move(sp), lo, hi, std::move(rows));
}

SplitLattices split_projections(const WindowLattice& lat) {
  const DieuSpace& sp = lat.space();
  const WittRing& R = sp.ring();
  int d = sp.dim(), r = R.r(), s = lat.width();
  int a = sp.n0_end(), b = sp.mid_end();

  SplitLattices out;
  out.space0 = sp.sub_block(0);
  out.space_mid = sp.sub_block(1);
  out.space1 = sp.sub_block(2);

  auto project = [&](int cfrom, int cto, std::shared_ptr<const DieuSpace> target) {
    int dd = cto - cfrom;
    WMat rows = WMat::zero(lat.basis().rows, dd, r);
    for (int i = 0; i < lat.basis().rows; ++i)
      for (int j = 0; j < dd; ++j)
        std::copy(lat.basis().at(i, cfrom + j), lat.basis().at(i, cfrom + j) + r,
                  rows.at(i, j));
    return WindowLattice::from_rows(std::move(target), lat.lo(), lat.hi(),
                                    std::move(rows));
  };
  auto intersect = [&](int cfrom, int cto, std::shared_ptr<const DieuSpace> target) {
    WMat gens = WMat::zero(lat.basis().rows, d, r);
    std::copy(lat.basis().limb.begin(), lat.basis().limb.end(), gens.limb.begin());
    std::vector<uint64_t> c(static_cast<size_t>(d) * r);
    for (int g = 0; g < d; ++g) {
      if (g >= cfrom && g < cto) continue;
      std::fill(c.begin(), c.end(), 0);
      R.one(c.data() + static_cast<size_t>(g) * r);
      gens = intersect_constraint(R, s, std::move(gens), c.data());
    }
    int dd = cto - cfrom;
    WMat rows = WMat::zero(gens.rows, dd, r);
    for (int i = 0; i < gens.rows; ++i)
      for (int j = 0; j < dd; ++j)
        std::copy(gens.at(i, cfrom + j), gens.at(i, cfrom + j) + r, rows.at(i, j));
    return WindowLattice::from_rows(std::move(target), lat.lo(), lat.hi(),
                                    std::move(rows));
  };

  out.lambda0 = project(0, a, out.space0);
  out.half_proj = project(a, b, out.space_mid);
  out.lambda1 = intersect(b, d, out.space1);
  out.half_int = intersect(a, b, out.space_mid);
  return out;
}

WindowLattice dual_in_partner_block(const std::shared_ptr<const DieuSpace>& parent,
                                    const WindowLattice& lat, int block) {
  if (!parent->has_pairing()) throw PreconditionViolated("dual requires a pairing");
  if (block != 0 && block != 2) throw IndexOutOfRange("block must be 0 or 2");
  const WittRing& R = parent->ring();
  int r = R.r(), s = lat.width();
  int a = parent->n0_end(), b = parent->mid_end(), d = parent->dim();
  int xfrom = block == 0 ? 0 : b, xto = block == 0 ? a : d;
  int yfrom = block == 0 ? b : 0, yto = block == 0 ? d : a;
  int dx = xto - xfrom, dy = yto - yfrom;
  if (lat.space().dim() != dx) throw RingMismatch("lattice does not live on the block");

  std::shared_ptr<const DieuSpace> target = parent->sub_block(block == 0 ? 2 : 0);
  WMat gens = WMat::zero(dy, dy, r);
  for (int g = 0; g < dy; ++g) R.one(gens.at(g, g));
  std::vector<uint64_t> c(static_cast<size_t>(dy) * r);
  for (int i = 0; i < lat.basis().rows; ++i) {
    std::fill(c.begin(), c.end(), 0);
    const uint64_t* row = lat.basis().row(i);
    for (int gy = 0; gy < dy; ++gy)
      for (int gx = 0; gx < dx; ++gx) {
        long long val = parent->gram(yfrom + gy, xfrom + gx);
        if (val == 0) continue;
        R.scal_int(c.data() + static_cast<size_t>(gy) * r, val,
                   row + static_cast<size_t>(gx) * r, s);
      }
    gens = intersect_constraint(R, s, std::move(gens), c.data());
  }
  return WindowLattice::from_rows(std::move(target), -lat.hi(), -lat.lo(),
                                  std::move(gens));
}

}  // namespace rz
