#include "rz/sigmalin.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace rz {

namespace {

bool elt_zero(const Fq::Elt& a) {
  for (uint64_t c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace

int AdditivePoly::degree() const {
  for (int l = static_cast<int>(coef.size()) - 1; l >= 0; --l)
    if (!elt_zero(coef[l])) return l;
  return -1;
}

AdditivePoly ap_normalize(AdditivePoly a) {
  a.coef.resize(static_cast<size_t>(a.degree() + 1));
  return a;
}

AdditivePoly ap_add(const Fq& F, const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly out;
  out.coef.resize(std::max(a.coef.size(), b.coef.size()), F.zero());
  for (size_t l = 0; l < out.coef.size(); ++l) {
    if (l < a.coef.size()) out.coef[l] = F.add(out.coef[l], a.coef[l]);
    if (l < b.coef.size()) out.coef[l] = F.add(out.coef[l], b.coef[l]);
  }
  return ap_normalize(std::move(out));
}

AdditivePoly ap_sub(const Fq& F, const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly nb;
  nb.coef.reserve(b.coef.size());
  for (const auto& c : b.coef) nb.coef.push_back(F.neg(c));
  return ap_add(F, a, nb);
}

AdditivePoly ap_scale(const Fq& F, const Fq::Elt& c, const AdditivePoly& a) {
  AdditivePoly out;
  out.coef.reserve(a.coef.size());
  for (const auto& x : a.coef) out.coef.push_back(F.mul(c, x));
  return ap_normalize(std::move(out));
}

AdditivePoly ap_twist(const Fq& F, const AdditivePoly& a, int t) {
  if (t < 0) throw IndexOutOfRange("negative Frobenius power");
  AdditivePoly out;
  out.coef.assign(static_cast<size_t>(t), F.zero());
  uint64_t pt = 1;
  for (int i = 0; i < t; ++i) pt *= static_cast<uint64_t>(F.p());
  for (const auto& c : a.coef) out.coef.push_back(F.pow(c, pt));
  return ap_normalize(std::move(out));
}

Fq::Elt ap_eval(const Fq& F, const AdditivePoly& a, const Fq::Elt& x) {
  Fq::Elt acc = F.zero();
  Fq::Elt xl = x;  // runs through x^{p^l}
  for (size_t l = 0; l < a.coef.size(); ++l) {
    acc = F.add(acc, F.mul(a.coef[l], xl));
    xl = F.frobenius(xl);
  }
  return acc;
}

void validate_system(const SigmaSystem& sys) {
  const Fq& F = sys.field;
  int E = sys.equations(), V = sys.variables();
  if (E == 0) throw PreconditionViolated("system has no equations");
  if (E > V) throw PreconditionViolated("more equations than variables");
  if (static_cast<int>(sys.rhs.size()) != E)
    throw PreconditionViolated("right-hand side length mismatch");
  for (const auto& b : sys.rhs)
    if (static_cast<int>(b.size()) != F.r())
      throw PreconditionViolated("right-hand side entry has wrong field size");
  for (int i = 0; i < E; ++i) {
    if (static_cast<int>(sys.lhs[i].size()) != V)
      throw PreconditionViolated("ragged coefficient matrix");
    for (int j = 0; j < V; ++j) {
      for (const auto& c : sys.lhs[i][j].coef)
        if (static_cast<int>(c.size()) != F.r())
          throw PreconditionViolated("coefficient has wrong field size");
      const auto& P = sys.lhs[i][j];
      bool linear_zero = P.coef.empty() || elt_zero(P.coef[0]);
      if (j < i && !linear_zero)
        throw PreconditionViolated("linear term below the diagonal");
      if (j == i && linear_zero)
        throw PreconditionViolated("diagonal linear term is not a unit");
    }
  }
}

SigmaSystem triangularize(SigmaSystem sys, int max_sigma_power) {
  validate_system(sys);
  const Fq& F = sys.field;
  int E = sys.equations(), V = sys.variables();

  auto check_cap = [&](const AdditivePoly& poly) {
    if (poly.degree() > max_sigma_power)
      throw DegreeCapExceeded("exponent p^" + std::to_string(poly.degree()) +
                              " exceeds the cap p^" + std::to_string(max_sigma_power));
  };
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < V; ++j) check_cap(sys.lhs[i][j]);

  // subtract c * sigma^t(equation src) from equation dst; invertible, and it
  // commutes with evaluation because Frobenius is a field automorphism
  auto combine = [&](int dst, int src, const Fq::Elt& c, int t) {
    for (int k = 0; k < V; ++k) {
      sys.lhs[dst][k] =
          ap_sub(F, sys.lhs[dst][k], ap_scale(F, c, ap_twist(F, sys.lhs[src][k], t)));
      check_cap(sys.lhs[dst][k]);
    }
    uint64_t pt = 1;
    for (int i = 0; i < t; ++i) pt *= static_cast<uint64_t>(F.p());
    sys.rhs[dst] = F.sub(sys.rhs[dst], F.mul(c, F.pow(sys.rhs[src], pt)));
  };

  for (int j = 0; j < E; ++j) {
    for (int i = j + 1; i < E; ++i) {
      // twisted Euclid between the pivot polynomial lhs[j][j] and the entry
      // lhs[i][j]; the pivot keeps its unit linear term because the entry
      // never has one, so the loop strictly shrinks the degree sum
      int guard = 2 * (max_sigma_power + 2);
      while (!sys.lhs[i][j].zero()) {
        if (--guard < 0) throw AssertionFailure("elimination failed to terminate");
        const AdditivePoly& A = sys.lhs[j][j];
        const AdditivePoly& B = sys.lhs[i][j];
        int a = A.degree(), b = B.degree();
        if (a < b) {
          int t = b - a;
          uint64_t pt = 1;
          for (int l = 0; l < t; ++l) pt *= static_cast<uint64_t>(F.p());
          Fq::Elt c = F.mul(B.coef[b], F.inv(F.pow(A.coef[a], pt)));
          combine(i, j, c, t);
        } else {
          int t = a - b;
          uint64_t pt = 1;
          for (int l = 0; l < t; ++l) pt *= static_cast<uint64_t>(F.p());
          Fq::Elt c = F.mul(A.coef[a], F.inv(F.pow(B.coef[b], pt)));
          combine(j, i, c, t);
        }
      }
    }
  }

  for (auto& row : sys.lhs)
    for (auto& poly : row) poly = ap_normalize(std::move(poly));
  validate_system(sys);
  return sys;
}

namespace {

uint64_t sat_pow_u(uint64_t q, int e) {
  uint64_t x = 1;
  while (e-- > 0) {
    if (q != 0 && x > UINT64_MAX / q) return UINT64_MAX;
    x *= q;
  }
  return x;
}

// index arithmetic in a small field, table-backed when the field is small
// enough for q^2 tables and falling back to element conversions otherwise
struct ExtOps {
  const Fq* F = nullptr;
  uint64_t q = 0;
  const std::vector<uint32_t>* mul_t = nullptr;
  const std::vector<uint32_t>* add_t = nullptr;

  uint64_t mul(uint64_t a, uint64_t b) const {
    if (mul_t) return (*mul_t)[a * q + b];
    return F->index(F->mul(F->element(a), F->element(b)));
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    if (add_t) return (*add_t)[a * q + b];
    return F->index(F->add(F->element(a), F->element(b)));
  }
};

struct FieldTables {
  Fq field;
  std::vector<uint32_t> mul, add;  // empty when the field is too big to table
};

const FieldTables& tables_for(long long p, int r) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, FieldTables> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find({p, r});
  if (it != cache.end()) return it->second;
  Fq F = Fq::make(p, r);
  FieldTables t{F, {}, {}};
  uint64_t q = F.q();
  if (q <= 1024) {
    t.mul.resize(q * q);
    t.add.resize(q * q);
    std::vector<Fq::Elt> elts(q);
    for (uint64_t i = 0; i < q; ++i) elts[i] = F.element(i);
    for (uint64_t i = 0; i < q; ++i)
      for (uint64_t j = 0; j < q; ++j) {
        t.mul[i * q + j] = static_cast<uint32_t>(F.index(F.mul(elts[i], elts[j])));
        t.add[i * q + j] = static_cast<uint32_t>(F.index(F.add(elts[i], elts[j])));
      }
  }
  return cache.emplace(std::make_pair(p, r), std::move(t)).first->second;
}

}  // namespace

std::set<std::vector<uint64_t>> brute_solutions(const SigmaSystem& sys, int s,
                                                uint64_t budget) {
  validate_system(sys);
  if (s < 1) throw IndexOutOfRange("extension degree must be positive");
  const Fq& F = sys.field;
  int E = sys.equations(), V = sys.variables();
  uint64_t qs = sat_pow_u(F.q(), s);
  if (sat_pow_u(qs, V) > budget)
    throw BudgetExceeded("search space q^{s*vars} exceeds the budget of " +
                         std::to_string(budget));

  const FieldTables& tab = tables_for(F.p(), F.r() * s);
  const Fq& X = tab.field;
  ExtOps ops{&X, X.q(), tab.mul.empty() ? nullptr : &tab.mul,
             tab.add.empty() ? nullptr : &tab.add};

  // embed the base field: send the variable class to a root of the base
  // modulus inside the extension
  std::vector<Fq::Elt> beta_pow(static_cast<size_t>(F.r()) + 1);
  Fq::Elt beta = X.zero();
  bool found = false;
  for (uint64_t i = 0; i < X.q() && !found; ++i) {
    Fq::Elt cand = X.element(i);
    Fq::Elt acc = X.zero(), cp = X.one();
    for (int d = 0; d < F.r(); ++d) {
      acc = X.add(acc, X.mul(X.from_int(static_cast<long long>(F.modulus_low()[d])), cp));
      cp = X.mul(cp, cand);
    }
    acc = X.add(acc, cp);
    if (X.is_zero(acc)) {
      beta = cand;
      found = true;
    }
  }
  if (!found) throw AssertionFailure("no root of the base modulus in the extension");
  beta_pow[0] = X.one();
  for (int d = 1; d <= F.r(); ++d) beta_pow[d] = X.mul(beta_pow[d - 1], beta);
  auto embed = [&](const Fq::Elt& a) {
    Fq::Elt acc = X.zero();
    for (int d = 0; d < F.r(); ++d)
      acc = X.add(acc, X.mul(X.from_int(static_cast<long long>(a[d])), beta_pow[d]));
    return X.index(acc);
  };

  int max_l = 0;
  for (const auto& row : sys.lhs)
    for (const auto& poly : row) max_l = std::max(max_l, poly.degree());

  // coefficient and right-hand-side indices in the extension
  std::vector<std::vector<std::vector<uint64_t>>> cidx(static_cast<size_t>(E));
  for (int i = 0; i < E; ++i) {
    cidx[i].resize(static_cast<size_t>(V));
    for (int j = 0; j < V; ++j)
      for (const auto& c : sys.lhs[i][j].coef) cidx[i][j].push_back(embed(c));
  }
  std::vector<uint64_t> ridx(static_cast<size_t>(E));
  for (int i = 0; i < E; ++i) ridx[i] = embed(sys.rhs[i]);

  // Frobenius towers x^{p^l} for every extension element, as indices
  std::vector<std::vector<uint64_t>> tower(static_cast<size_t>(X.q()));
  for (uint64_t x = 0; x < X.q(); ++x) {
    tower[x].resize(static_cast<size_t>(max_l) + 1);
    Fq::Elt cur = X.element(x);
    for (int l = 0; l <= max_l; ++l) {
      tower[x][l] = X.index(cur);
      cur = X.frobenius(cur);
    }
  }

  uint64_t zero_idx = X.index(X.zero());
  std::set<std::vector<uint64_t>> out;
  std::vector<uint64_t> v(static_cast<size_t>(V), 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < E && ok; ++i) {
      uint64_t acc = zero_idx;
      for (int j = 0; j < V; ++j)
        for (size_t l = 0; l < cidx[i][j].size(); ++l)
          acc = ops.add(acc, ops.mul(cidx[i][j][l], tower[v[j]][l]));
      ok = acc == ridx[i];
    }
    if (ok) out.insert(v);
    int pos = 0;
    while (pos < V && ++v[pos] == X.q()) v[pos++] = 0;
    if (pos == V) break;
  }
  return out;
}

}  // namespace rz
