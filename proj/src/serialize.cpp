#include "rz/serialize.hpp"

#include <sstream>

namespace rz {

namespace {

Json elt_to_json(const Fq::Elt& e) {
  Json a = Json::array();
  for (uint64_t c : e) a.push_back(c);
  return a;
}

Fq::Elt elt_from_json(const Json& j, int r, long long p) {
  if (!j.is_array() || static_cast<int>(j.size()) != r)
    throw ParseError("field element needs exactly " + std::to_string(r) + " digits");
  Fq::Elt e;
  for (const auto& c : j) {
    uint64_t v = c.get<uint64_t>();
    if (v >= static_cast<uint64_t>(p)) throw ParseError("field digit out of range");
    e.push_back(v);
  }
  return e;
}

std::string residue_field_name(long long p, int r) {
  long long q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  return "F_" + std::to_string(q);
}

std::string basis_hex(const WMat& m) {
  std::ostringstream os;
  os << std::hex;
  for (int i = 0; i < m.rows; ++i) {
    if (i) os << ';';
    const uint64_t* row = m.row(i);
    size_t len = static_cast<size_t>(m.cols) * m.r;
    for (size_t t = 0; t < len; ++t) {
      if (t) os << '.';
      os << row[t];
    }
  }
  return os.str();
}

Json window_to_json(int lo, int hi) { return Json::array({lo, hi}); }

}  // namespace

Json polygon_to_json(const NewtonPolygon& np) {
  Json arr = Json::array();
  for (const auto& s : np.summands) arr.push_back(Json::array({s.m, s.n}));
  return Json{{"summands", arr}};
}

NewtonPolygon polygon_from_json(const Json& j) {
  if (!j.contains("summands") || !j["summands"].is_array())
    throw ParseError("polygon JSON needs a \"summands\" array");
  std::string text;
  for (const auto& s : j["summands"]) {
    if (!s.is_array() || s.size() != 2) throw ParseError("summand must be [m, n]");
    if (!text.empty()) text += ',';
    text += std::to_string(s[0].get<long long>()) + ':' +
            std::to_string(s[1].get<long long>());
  }
  return parse_newton(text);  // shares validation and canonical ordering
}

Json coweight_to_json(const Coweight& w) {
  Json a = Json::array();
  for (const auto& x : w.a) a.push_back(x.str());
  return Json{{"a", a}, {"c", w.c.str()}};
}

Coweight coweight_from_json(const Json& j) {
  if (!j.contains("a") || !j["a"].is_array() || !j.contains("c"))
    throw ParseError("coweight JSON needs \"a\" and \"c\"");
  Coweight w;
  for (const auto& x : j["a"]) w.a.push_back(Rat::parse(x.get<std::string>()));
  w.c = Rat::parse(j["c"].get<std::string>());
  return w;
}

Json report_to_json(const DimensionReport& rep) {
  return Json{{"np", polygon_to_json(rep.np)},
              {"height", rep.height},
              {"h", rep.h},
              {"l", rep.l},
              {"m", rep.m},
              {"defect", rep.defect},
              {"dim_closed_form", rep.dim_closed_form.str()},
              {"dim_closed_form_decimal", rep.dim_closed_form.to_double()},
              {"dim_weight_floor", rep.dim_weight_floor.str()},
              {"dim_weight_floor_decimal", rep.dim_weight_floor.to_double()},
              {"dim_defect", rep.dim_defect.str()},
              {"dim_defect_decimal", rep.dim_defect.to_double()},
              {"dim_nonpolarized_n0", rep.dim_nonpolarized_n0},
              {"extension_dim", rep.extension_dim},
              {"has_middle", rep.has_middle},
              {"agree", rep.agree}};
}

Json components_to_json(const ComponentGroupDescription& cg) {
  return Json{{"mult_height", cg.mult_height}, {"pi0", cg.str()}};
}

Json ring_to_json(const WittRing& R) {
  Json mod = Json::array();
  for (uint64_t c : R.modulus_low()) mod.push_back(c);
  return Json{{"p", R.p()}, {"r", R.r()}, {"n", R.n()}, {"modulus", mod}};
}

std::shared_ptr<const WittRing> ring_from_json(const Json& j) {
  long long p = j.at("p").get<long long>();
  int r = j.at("r").get<int>();
  int n = j.at("n").get<int>();
  std::vector<uint64_t> mod;
  for (const auto& c : j.at("modulus")) mod.push_back(c.get<uint64_t>());
  return std::make_shared<WittRing>(p, r, n, std::move(mod));
}

namespace {

void expect_same_ring(const Json& descriptor, const WittRing& R) {
  auto other = ring_from_json(descriptor);
  if (!R.same(*other)) throw RingMismatch("serialized ring differs from the given one");
}

}  // namespace

Json scalar_to_json(const WittScalar& a) {
  Json digits = Json::array();
  for (const auto& d : a.digits()) digits.push_back(elt_to_json(d));
  return Json{{"ring", ring_to_json(a.ring())}, {"digits", digits}};
}

WittScalar scalar_from_json(const Json& j, const WittRing& ring) {
  expect_same_ring(j.at("ring"), ring);
  std::vector<Fq::Elt> ds;
  for (const auto& d : j.at("digits"))
    ds.push_back(elt_from_json(d, ring.r(), ring.p()));
  if (static_cast<int>(ds.size()) != ring.n())
    throw ParseError("scalar needs one digit per precision level");
  std::vector<uint64_t> limbs(static_cast<size_t>(ring.r()));
  ring.from_digits(limbs.data(), ds, ring.n());
  return WittScalar::from_limbs(ring, std::move(limbs));
}

Json lattice_to_json(const WindowLattice& lat) {
  const DieuSpace& sp = lat.space();
  const WittRing& R = sp.ring();
  int s = lat.width();
  Json rows = Json::array();
  for (int i = 0; i < lat.basis().rows; ++i) {
    Json row = Json::array();
    for (int g = 0; g < sp.dim(); ++g) {
      Json digits = Json::array();
      for (const auto& d : R.digits(lat.basis().at(i, g), s))
        digits.push_back(elt_to_json(d));
      row.push_back(digits);
    }
    rows.push_back(row);
  }
  return Json{{"space",
               Json{{"np", polygon_to_json(sp.np())},
                    {"ring", ring_to_json(R)},
                    {"pairing", sp.has_pairing()},
                    {"convention", "cyclic-shift-with-signed-middle-wrap"}}},
              {"window", window_to_json(lat.lo(), lat.hi())},
              {"basis", rows}};
}

WindowLattice lattice_from_json(const Json& j) {
  const Json& sj = j.at("space");
  NewtonPolygon np = polygon_from_json(sj.at("np"));
  long long p = sj.at("ring").at("p").get<long long>();
  int r = sj.at("ring").at("r").get<int>();
  int n = sj.at("ring").at("n").get<int>();
  auto sp = sj.at("pairing").get<bool>() ? DieuSpace::polarized(np, p, r, n)
                                         : DieuSpace::plain(np, p, r, n);
  expect_same_ring(sj.at("ring"), sp->ring());
  int lo = j.at("window").at(0).get<int>(), hi = j.at("window").at(1).get<int>();
  int s = hi - lo;
  const Json& rows = j.at("basis");
  WMat m = WMat::zero(static_cast<int>(rows.size()), sp->dim(), r);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != sp->dim())
      throw ParseError("basis row has the wrong number of columns");
    for (int g = 0; g < sp->dim(); ++g) {
      std::vector<Fq::Elt> ds;
      for (const auto& d : rows[i][g]) ds.push_back(elt_from_json(d, r, p));
      if (static_cast<int>(ds.size()) != s)
        throw ParseError("basis entry needs one digit per window level");
      sp->ring().from_digits(m.at(i, g), ds, s);
    }
  }
  return WindowLattice::from_rows(sp, lo, hi, std::move(m));
}

Json system_to_json(const SigmaSystem& sys) {
  const Fq& F = sys.field;
  Json mod = Json::array();
  for (uint64_t c : F.modulus_low()) mod.push_back(c);
  Json lhs = Json::array();
  for (const auto& row : sys.lhs) {
    Json jrow = Json::array();
    for (const auto& poly : row) {
      Json jpoly = Json::array();
      for (const auto& c : poly.coef) jpoly.push_back(elt_to_json(c));
      jrow.push_back(jpoly);
    }
    lhs.push_back(jrow);
  }
  Json rhs = Json::array();
  for (const auto& b : sys.rhs) rhs.push_back(elt_to_json(b));
  return Json{{"field", Json{{"p", F.p()}, {"r", F.r()}, {"modulus", mod}}},
              {"lhs", lhs},
              {"rhs", rhs}};
}

SigmaSystem system_from_json(const Json& j) {
  const Json& fj = j.at("field");
  long long p = fj.at("p").get<long long>();
  int r = fj.at("r").get<int>();
  std::vector<uint64_t> mod;
  for (const auto& c : fj.at("modulus")) mod.push_back(c.get<uint64_t>());
  Fq F(p, r, std::move(mod));
  SigmaSystem sys{F, {}, {}};
  for (const auto& jrow : j.at("lhs")) {
    std::vector<AdditivePoly> row;
    for (const auto& jpoly : jrow) {
      AdditivePoly poly;
      for (const auto& c : jpoly) poly.coef.push_back(elt_from_json(c, r, p));
      row.push_back(ap_normalize(std::move(poly)));
    }
    sys.lhs.push_back(std::move(row));
  }
  for (const auto& b : j.at("rhs")) sys.rhs.push_back(elt_from_json(b, r, p));
  return sys;
}

namespace {

Json census_metadata(const CensusQuery& q) {
  return Json{{"np", q.np.str()},
              {"p", q.p},
              {"r", q.r},
              {"window", window_to_json(q.lo, q.hi)},
              {"residue_field", residue_field_name(q.p, q.r)},
              {"budget", q.budget}};
}

}  // namespace

std::string census_to_csv(const CensusQuery& q, const std::vector<CensusRecord>& recs) {
  std::ostringstream os;
  os << "# np=" << q.np.str() << "\n# p=" << q.p << "\n# r=" << q.r << "\n# window="
     << q.lo << ':' << q.hi << "\n# residue_field=" << residue_field_name(q.p, q.r)
     << "\n# budget=" << q.budget << "\n";
  os << "kappa,a_inv,rel_volume,a0,a1,basis\n";
  for (const auto& rec : recs)
    os << rec.kappa << ',' << rec.a_inv << ',' << rec.rel_volume << ',' << rec.a0
       << ',' << rec.a1 << ',' << basis_hex(rec.lattice.basis()) << '\n';
  return os.str();
}

Json census_to_json(const CensusQuery& q, const std::vector<CensusRecord>& recs) {
  Json arr = Json::array();
  for (const auto& rec : recs)
    arr.push_back(Json{{"kappa", rec.kappa},
                       {"a_inv", rec.a_inv},
                       {"rel_volume", rec.rel_volume},
                       {"a0", rec.a0},
                       {"a1", rec.a1},
                       {"basis", basis_hex(rec.lattice.basis())}});
  return Json{{"metadata", census_metadata(q)}, {"records", arr}};
}

}  // namespace rz
