#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rz/newton.hpp"
#include "rz/wittring.hpp"

namespace rz {

// Dense matrix over a truncated Witt ring; each entry is r limbs, row-major.
struct WMat {
  int rows = 0, cols = 0, r = 1;
  std::vector<uint64_t> limb;

  static WMat zero(int rows, int cols, int r) {
    WMat m;
    m.rows = rows;
    m.cols = cols;
    m.r = r;
    m.limb.assign(static_cast<size_t>(rows) * cols * r, 0);
    return m;
  }
  uint64_t* at(int i, int j) {
    return &limb[(static_cast<size_t>(i) * cols + j) * r];
  }
  const uint64_t* at(int i, int j) const {
    return &limb[(static_cast<size_t>(i) * cols + j) * r];
  }
  uint64_t* row(int i) { return &limb[static_cast<size_t>(i) * cols * r]; }
  const uint64_t* row(int i) const {
    return &limb[static_cast<size_t>(i) * cols * r];
  }
  void append_row() {
    ++rows;
    limb.resize(static_cast<size_t>(rows) * cols * r, 0);
  }
};

struct Pivot {
  int col;
  int val;
};

// Canonical Howell form of the row span of M inside (W_s)^cols: unique pivot
// per column, pivot entries exactly p^v, zeros below, entries above reduced
// mod p^v, rows sorted by pivot column, span closed under the trailing
// p^{s-v} multiples.  Equal spans give identical forms.
std::vector<Pivot> howell(WMat& M, const WittRing& R, int s);

// Cyclic-basis model of the Dieudonne module attached to a Newton polygon:
// F permutes basis vectors up to a factor in {1, p, -p}, the pairing (when
// present) is the antidiagonal +-1 antisymmetric form.
class DieuSpace {
 public:
  // symmetric polygons only; carries the pairing
  static std::shared_ptr<const DieuSpace> polarized(const NewtonPolygon& np,
                                                    long long p, int r, int n);
  // any polygon; F and V only
  static std::shared_ptr<const DieuSpace> plain(const NewtonPolygon& np,
                                                long long p, int r, int n);
  // restriction to one slope block: 0 = slopes < 1/2, 1 = slope 1/2,
  // 2 = slopes > 1/2 (the middle block keeps its pairing)
  std::shared_ptr<const DieuSpace> sub_block(int which) const;

  const NewtonPolygon& np() const { return np_; }
  const WittRing& ring() const { return *ring_; }
  std::shared_ptr<const WittRing> ring_ptr() const { return ring_; }
  int dim() const { return dim_; }
  bool has_pairing() const { return has_pairing_; }
  bool equivalent(const DieuSpace& o) const;

  int f_perm(int g) const { return f_perm_[g]; }
  long long f_coef(int g) const { return f_coef_[g]; }
  int v_perm(int g) const { return v_perm_[g]; }
  long long v_coef(int g) const { return v_coef_[g]; }
  long long gram(int g, int gp) const;  // <e_g, e_gp>

  // slope-block column ranges: [0, n0_end) | [n0_end, mid_end) | [mid_end, dim)
  int n0_end() const { return n0_end_; }
  int mid_end() const { return mid_end_; }

  // semilinear action on a coordinate row (dim entries), precision s
  void apply_f(uint64_t* out, const uint64_t* in, int s) const;
  void apply_v(uint64_t* out, const uint64_t* in, int s) const;
  // pairing of two coordinate rows, result is one ring element
  void pair(uint64_t* out, const uint64_t* x, const uint64_t* y, int s) const;

 private:
  static std::shared_ptr<const DieuSpace> build(const NewtonPolygon& np,
                                                std::shared_ptr<const WittRing> ring,
                                                bool with_pairing);
  NewtonPolygon np_;
  std::shared_ptr<const WittRing> ring_;
  int dim_ = 0;
  bool has_pairing_ = false;
  std::vector<int> f_perm_, v_perm_;
  std::vector<long long> f_coef_, v_coef_;
  std::vector<int> partner_;      // -1 when no pairing entry
  std::vector<long long> sign_;
  int n0_end_ = 0, mid_end_ = 0;
};

// A lattice pinched between p^hi*Lambda_min and p^lo*Lambda_min, presented by
// the canonical Howell form of its image in (W_s)^dim, s = hi - lo, in
// coordinates with respect to the p^lo-scaled basis.  The window floor
// p^hi*Lambda_min is the zero submodule of that quotient, so every window
// lattice contains it by construction.
class WindowLattice {
 public:
  WindowLattice() = default;
  static WindowLattice from_rows(std::shared_ptr<const DieuSpace> sp, int lo,
                                 int hi, WMat rows);
  static WindowLattice minimal(std::shared_ptr<const DieuSpace> sp, int lo, int hi);

  const DieuSpace& space() const { return *space_; }
  std::shared_ptr<const DieuSpace> space_ptr() const { return space_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int width() const { return hi_ - lo_; }
  const WMat& basis() const { return basis_; }
  const std::vector<Pivot>& pivots() const { return pivots_; }

  // length of Lambda / p^hi*Lambda_min as a W-module (residue-field dims)
  long long length() const;
  // length of Lambda_min / Lambda (negative when Lambda is bigger)
  long long rel_volume() const;

  // coords w.r.t. p^lo basis, dim entries, read mod p^width
  bool member(const uint64_t* coords) const;
  // greedy reduction against the basis; returns the canonical residual
  std::vector<uint64_t> reduce(const uint64_t* coords) const;

  WindowLattice widen(int nlo, int nhi) const;  // WindowTooSmall on narrowing
  WindowLattice scale(int k) const;             // p^k * Lambda
  bool same_presentation(const WindowLattice& o) const;  // same window+form
  bool same_lattice(const WindowLattice& o) const;       // widen and compare

  WindowLattice f_image() const;  // F(Lambda), window (lo, hi+1)
  WindowLattice v_image() const;
  WindowLattice sum(const WindowLattice& o) const;  // same window required

  std::string key() const;  // deterministic dedup/sort key

 private:
  std::shared_ptr<const DieuSpace> space_;
  int lo_ = 0, hi_ = 0;
  WMat basis_;
  std::vector<Pivot> pivots_;
};

// valuation of the Dieudonne-ring monomial a F^i V^j
int monomial_valuation(const WittScalar& a, int i, int j);

bool is_dieudonne(const WindowLattice& lat);

// {x : <x, Lambda> integral}, exact in the mirrored window (-hi, -lo)
WindowLattice dual_lattice(const WindowLattice& lat);

// the k with dual(Lambda) = p^k Lambda; NotSelfDual otherwise
int kappa(const WindowLattice& lat);

// dim over the residue field of Lambda / (F Lambda + V Lambda); NotDieudonne
int a_invariant(const WindowLattice& lat);

// least F,V-stable window lattice containing v (coords w.r.t. p^lo basis)
WindowLattice generated_module(std::shared_ptr<const DieuSpace> sp, int lo,
                               int hi, const std::vector<uint64_t>& v);

// lattice from generators given as integer coordinates w.r.t. the unscaled
// basis e; VectorOutsideWindow if a generator is not in p^lo*Lambda_min
WindowLattice lattice_from_e_coords(std::shared_ptr<const DieuSpace> sp, int lo,
                                    int hi,
                                    const std::vector<std::vector<long long>>& gens);

struct SplitLattices {
  std::shared_ptr<const DieuSpace> space0, space_mid, space1;
  WindowLattice lambda0;    // projection to the slope < 1/2 block
  WindowLattice lambda1;    // intersection with the slope > 1/2 block
  WindowLattice half_proj;  // projection to the slope 1/2 block
  WindowLattice half_int;   // intersection with the slope 1/2 block
};
SplitLattices split_projections(const WindowLattice& lat);

// dual of a sublattice of one slope block, taken inside the partner block
// under the cross pairing; lat must live on parent.sub_block(block) with
// block in {0, 2}, and the result lives on the opposite block's space
WindowLattice dual_in_partner_block(const std::shared_ptr<const DieuSpace>& parent,
                                    const WindowLattice& lat, int block);

}  // namespace rz
